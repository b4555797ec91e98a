#ifndef FERMATKIT_UNITS_HPP
#define FERMATKIT_UNITS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fermatkit/bipoly.hpp"
#include "fermatkit/number_field.hpp"

namespace fk {

// a totally positive unit together with its tower polynomial H, the
// characteristic polynomial of multiplication by u (degree d; equals the
// minimal polynomial when u is primitive)
struct UnitCertificate {
    FieldElement u;
    IntPoly H;
    int t = 0;  // degree of H
    bool totally_positive = false;
};

UnitCertificate make_unit_certificate(const FieldElement& u);

// characteristic polynomial of multiplication by x, monic integer poly of
// degree d (x must be integral)
IntPoly char_poly(const FieldElement& x);

// H_n for n = 1..n_max via exact resultants, with H_n(1) values
std::vector<Int> h_tower_exact(const UnitCertificate& u, int n_max);
// H_n(1) via the certified interval product over root tuples; refuses to
// round (returns nullopt) only past the precision cap
std::optional<Int> h_tower_interval_value(const UnitCertificate& u, int n);

struct RkLevel {
    int n = 0;
    Int degree;                     // t^n
    std::vector<Int> values;        // H_n^{(u)}(1) per unit
    std::vector<std::string> path;  // "resultant" or "interval" per unit
    Int A_n;                        // gcd of |values|
    bool conclusive = true;         // false when some value is 0
};

struct RkCertificate {
    std::vector<UnitCertificate> units;
    std::vector<RkLevel> levels;
    Int R_multiple;  // product of the A_n; a multiple of the field's R_K
    bool conclusive = true;
};

// tower values for the supplied totally positive units up to n = floor(d/2)
RkCertificate rk_multiple(const std::vector<UnitCertificate>& units, int d);

// exact degree threshold beyond which the interval path is used
inline constexpr long kTowerResultantDegreeLimit = 200;

struct SignMapReport {
    std::vector<std::vector<int>> sign_vectors;  // per generator (incl. -1)
    int rank = 0;                                // over GF(2)
    Int h_plus;
};

SignMapReport narrow_class_number(const NumberField& K);

struct RayClassModulus {
    enum class Kind { trivial, prime, mod4 } kind = Kind::trivial;
    std::optional<PrimeIdealData> prime;  // for Kind::prime
    static RayClassModulus trivial_modulus() { return {}; }
    static RayClassModulus prime_ideal(PrimeIdealData q) {
        RayClassModulus m;
        m.kind = Kind::prime;
        m.prime = std::move(q);
        return m;
    }
    static RayClassModulus four() {
        RayClassModulus m;
        m.kind = Kind::mod4;
        return m;
    }
    std::string describe() const;
};

struct RayClassReport {
    std::string modulus;
    bool all_infinite_places = false;
    Int group_order;  // |(O_K/m)^* x {+-1}^S|
    Int image_order;  // image of the unit group
    Int ray_class_number;
};

RayClassReport ray_class_number(const NumberField& K, const RayClassModulus& m,
                                bool include_all_infinite);

struct Theorem17Verdict {
    bool two_totally_ramified = false;
    Int h_plus;
    bool h_plus_is_one = false;
    bool h_K_is_one = false;
    bool units_surject_mod4 = false;       // phi(U_K) = (O_K/4)^*
    bool units_span_mod4_squares = false;  // image generates G/G^2
    bool K_equals_ray_class_field_mod4 = false;
    bool corollary_consistent = false;  // h+ = 1  <=>  K = K^{4O_K}
};

Theorem17Verdict theorem17_check(const NumberField& K);

// unit eps with eps^{-1} = -a (mod 4O_K); requires K = K^{4O_K}
FieldElement find_normalizing_unit(const NumberField& K, const FieldElement& a);

// unit eps with (eps a)^p = -1 (mod 4O_K) for odd p; same requirements
FieldElement find_power_normalizing_unit(const NumberField& K, const FieldElement& a,
                                         const Int& p);

}  // namespace fk

#endif
