#include "fermatkit/poly.hpp"

namespace fk {

RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

IntPoly to_int_checked(const RatPoly& p) {
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        if (!is_integer(v)) fail_internal("polynomial is not integral");
        c.emplace_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) fail_input("polynomial division by zero");
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rat> q(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
    for (int i = a.degree(); i >= db; --i) {
        Rat f = rem[static_cast<size_t>(i)] / b.lc();
        if (f == 0) continue;
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= f * b[static_cast<size_t>(j)];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(rem))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divmod(to_rat(a), to_rat(b));
    if (!r.is_zero()) fail_internal("inexact polynomial division");
    return to_int_checked(q);
}

Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& c : p.coeffs()) g = int_gcd(g, c);
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.lc() < 0) g = -g;
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(v / g);
    return IntPoly(std::move(c));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    RatPoly x = to_rat(a), y = to_rat(b);
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    if (x.is_zero()) return IntPoly();
    // clear denominators, take the primitive part
    Int den = 1;
    for (const auto& c : x.coeffs()) {
        Int d = c.get_den();
        den = den / int_gcd(den, d) * d;
    }
    std::vector<Int> c;
    for (const auto& v : x.coeffs()) c.emplace_back(Rat(v * den).get_num());
    return primitive_part(IntPoly(std::move(c)));
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) fail_input("squarefree part of the zero polynomial");
    IntPoly g = gcd(p, p.derivative());
    if (g.degree() <= 0) return primitive_part(p);
    return primitive_part(exact_div(primitive_part(p) * Int(g.lc()), g));
}

template <class T>
static bool ring_zero(const T& v) {
    return v == T(0);
}

template <class T>
static T ring_div(const T& a, const T& b);
template <>
Int ring_div<Int>(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
template <>
IntPoly ring_div<IntPoly>(const IntPoly& a, const IntPoly& b) {
    return exact_div(a, b);
}

template <class T>
static T bareiss_impl(std::vector<std::vector<T>>& m) {
    const size_t n = m.size();
    if (n == 0) return T(1);
    int sign = 1;
    T prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ring_zero(m[k][k])) {
            size_t piv = k + 1;
            while (piv < n && ring_zero(m[piv][k])) ++piv;
            if (piv == n) return T(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = ring_div(num, prev);
            }
            m[i][k] = T(0);
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return sign < 0 ? T(-det) : det;
}

template <>
Int bareiss_determinant<Int>(std::vector<std::vector<Int>> m) {
    return bareiss_impl(m);
}
template <>
IntPoly bareiss_determinant<IntPoly>(std::vector<std::vector<IntPoly>> m) {
    return bareiss_impl(m);
}

static std::vector<std::vector<Int>> sylvester(const IntPoly& p, const IntPoly& q) {
    const int dp = p.degree(), dq = q.degree();
    const size_t n = static_cast<size_t>(dp + dq);
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (int row = 0; row < dq; ++row)
        for (int j = 0; j <= dp; ++j)
            m[static_cast<size_t>(row)][static_cast<size_t>(row + j)] =
                p[static_cast<size_t>(dp - j)];
    for (int row = 0; row < dp; ++row)
        for (int j = 0; j <= dq; ++j)
            m[static_cast<size_t>(dq + row)][static_cast<size_t>(row + j)] =
                q[static_cast<size_t>(dq - j)];
    return m;
}

Int resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) fail_input("resultant of the zero polynomial");
    if (p.degree() == 0) return int_pow(p.lc(), static_cast<unsigned long>(q.degree()));
    if (q.degree() == 0) return int_pow(q.lc(), static_cast<unsigned long>(p.degree()));
    return bareiss_determinant<Int>(sylvester(p, q));
}

Int discriminant(const IntPoly& p) {
    const int d = p.degree();
    if (d < 1) fail_input("discriminant needs degree >= 1");
    if (d == 1) return Int(1);
    Int r = resultant(p, p.derivative());
    Int q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), p.lc().get_mpz_t());
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) q = -q;
    return q;
}

}  // namespace fk
