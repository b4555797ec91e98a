#ifndef FERMATKIT_POLY_HPP
#define FERMATKIT_POLY_HPP

#include <algorithm>
#include <vector>

#include "fermatkit/bigint.hpp"
#include "fermatkit/errors.hpp"

namespace fk {

// Dense univariate polynomial, coefficients ascending.  The zero polynomial
// has an empty coefficient vector; otherwise the leading coefficient is
// nonzero.
template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    static Poly zero() { return Poly(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly x_power(int k, const T& lead = T(1)) {
        std::vector<T> c(static_cast<size_t>(k) + 1, T(0));
        c.back() = lead;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](size_t i) const {
        static const T kZero = T(0);
        return i < c_.size() ? c_[i] : kZero;
    }
    const T& lc() const {
        if (c_.empty()) fail_input("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        std::vector<T> c(c_);
        for (auto& v : c) v = -v;
        return Poly(std::move(c));
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == T(0)) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const T& s, const Poly& p) {
        std::vector<T> c(p.c_);
        for (auto& v : c) v = s * v;
        return Poly(std::move(c));
    }

    template <class U>
    U eval(const U& x) const {
        U r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + U(c_[i]);
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = T(static_cast<long>(i)) * c_[i];
        return Poly(std::move(c));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

RatPoly to_rat(const IntPoly& p);
IntPoly to_int_checked(const RatPoly& p);

// quotient/remainder over a field
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// exact division in Z[x]; error if the division leaves a remainder
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

Int content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

// monic gcd over Q, returned as a primitive integer polynomial
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly squarefree_part(const IntPoly& p);

// Sylvester-determinant resultant (fraction-free evaluation)
Int resultant(const IntPoly& p, const IntPoly& q);
Int discriminant(const IntPoly& p);

// fraction-free determinant (Bareiss); works over any integral domain with
// exact division
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m);

template <>
Int bareiss_determinant<Int>(std::vector<std::vector<Int>> m);
template <>
IntPoly bareiss_determinant<IntPoly>(std::vector<std::vector<IntPoly>> m);

}  // namespace fk

#endif
