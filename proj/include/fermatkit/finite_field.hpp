#ifndef FERMATKIT_FINITE_FIELD_HPP
#define FERMATKIT_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "fermatkit/poly.hpp"

namespace fk {

// F_{p^f} presented as F_p[x]/(g), g monic irreducible of degree f.
// Elements are coefficient vectors of length f (ascending, values < p).
class FiniteField {
  public:
    using Elem = std::vector<std::uint64_t>;

    FiniteField(const Int& p, const IntPoly& modulus);

    std::uint64_t charac() const { return p_; }
    int degree() const { return f_; }
    Int order() const;
    const std::vector<std::uint64_t>& modulus() const { return mod_; }

    Elem zero() const { return Elem(static_cast<size_t>(f_), 0); }
    Elem one() const;
    Elem from_int(const Int& n) const;
    Elem generator_image() const;  // the class of x

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(const Elem& a, const Int& e) const;

    // dense enumeration: index in [0, p^f) <-> element
    std::uint64_t index_of(const Elem& a) const;
    Elem elem_at(std::uint64_t idx) const;

    // quadratic character: 0 on zero, +1 on nonzero squares, -1 otherwise
    int chi(const Elem& a) const;

  private:
    std::uint64_t p_;
    int f_;
    std::vector<std::uint64_t> mod_;  // length f+1, monic
};

// irreducible factors of P mod p with multiplicities, lifted to Z[x] with
// coefficients in [0, p); deterministic (fixed-seed splitting elements)
std::vector<std::pair<IntPoly, int>> factor_mod_p(const IntPoly& P, const Int& p);

// #E(F) for y^2 = x(x-s)(x+t) via the quadratic-character sum
Int count_points_legendre(const FiniteField::Elem& s, const FiniteField::Elem& t,
                          const FiniteField& F);

// brute-force (x, y) enumeration, the independent oracle for small fields
Int count_points_exhaustive(const FiniteField::Elem& s, const FiniteField::Elem& t,
                            const FiniteField& F);

}  // namespace fk

#endif
