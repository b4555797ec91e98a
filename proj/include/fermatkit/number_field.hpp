#ifndef FERMATKIT_NUMBER_FIELD_HPP
#define FERMATKIT_NUMBER_FIELD_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fermatkit/finite_field.hpp"
#include "fermatkit/interval.hpp"
#include "fermatkit/poly.hpp"

namespace fk {

class NumberField;

// exact rational coordinate vector over the field's integral basis
struct FieldElement {
    const NumberField* field = nullptr;
    std::vector<Rat> coords;

    bool is_zero() const;
    bool is_integral() const;
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field == b.field && a.coords == b.coords;
    }
};

struct PrimeIdealData {
    Int p;
    int e = 0;
    int f = 0;
    std::optional<IntPoly> gen_poly;  // factor of min_poly mod p; absent when
                                      // the splitting came from fixture data
    std::shared_ptr<const FiniteField> residue_field;
    Int norm;
    bool external = false;
};

// raw descriptor contents; validation happens in NumberField's constructor
struct NumberFieldData {
    std::string label;
    IntPoly min_poly;
    std::vector<std::vector<Rat>> integral_basis;  // rows over the power basis
    Int disc;
    std::optional<Int> h_K;
    std::vector<std::vector<Rat>> fundamental_units;  // integral-basis coords
    std::vector<std::vector<Rat>> torsion_units;
    std::vector<std::vector<Rat>> rk_units;
    std::map<Int, std::vector<std::pair<int, int>>> prime_overrides;  // p -> (e, f)
    std::string notes;
};

// group of units of O_K/4O_K with elements packed two bits per coordinate
class QuotientRingMod4 {
  public:
    using Packed = std::uint32_t;

    explicit QuotientRingMod4(const NumberField& K);

    const NumberField& field() const { return *K_; }
    Packed pack(const FieldElement& x) const;  // x must be integral
    Packed one() const { return one_; }
    Packed mul(Packed a, Packed b) const;
    Packed pow(Packed a, Int e) const;
    Packed inv(Packed a) const;
    bool is_unit(Packed a) const;

    std::size_t unit_count() const { return units_.size(); }
    const std::vector<Packed>& units() const { return units_; }
    // |G/G^2|
    Int square_index() const;
    std::vector<Packed> squares() const;

    // subgroup generated by the given unit classes
    std::vector<Packed> closure(const std::vector<Packed>& gens) const;

  private:
    const NumberField* K_;
    int d_;
    std::vector<std::array<long, 8>> mul_table_;  // structure constants mod 4
    std::vector<Packed> units_;
    Packed one_;
};

class NumberField {
  public:
    explicit NumberField(NumberFieldData data);

    const std::string& label() const { return data_.label; }
    const IntPoly& min_poly() const { return data_.min_poly; }
    int degree() const { return d_; }
    const Int& disc() const { return data_.disc; }
    const std::optional<Int>& class_number() const { return data_.h_K; }
    const std::string& notes() const { return data_.notes; }
    const Int& index_in_power_basis() const { return index_; }
    bool irreducibility_certified() const { return irreducible_certified_; }

    // elements ---------------------------------------------------------
    FieldElement element(std::vector<Rat> basis_coords) const;
    FieldElement from_power_coords(const std::vector<Rat>& power_coords) const;
    FieldElement from_rational(const Rat& r) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement alpha() const;  // the root of min_poly
    std::vector<Rat> power_coords(const FieldElement& x) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inverse(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, const Int& e) const;
    Rat norm(const FieldElement& a) const;
    Rat trace(const FieldElement& a) const;
    std::vector<std::vector<Rat>> mult_matrix(const FieldElement& a) const;

    const std::vector<FieldElement>& fundamental_units() const { return units_; }
    const std::vector<FieldElement>& rk_units() const { return rk_units_; }

    // real embeddings ----------------------------------------------------
    std::vector<RealInterval> embeddings(const FieldElement& x, long prec_bits) const;
    // definite signs of all embeddings, refining as needed
    std::vector<int> embedding_signs(const FieldElement& x) const;
    bool totally_positive(const FieldElement& x) const;

    // primes ------------------------------------------------------------
    std::vector<PrimeIdealData> dedekind_factor(const Int& p) const;
    bool two_totally_ramified() const;
    // the L-adic valuation when 2 is totally ramified (f(L|2) = 1)
    long v_L(const FieldElement& x) const;
    FiniteField::Elem reduce_mod_prime(const FieldElement& x,
                                       const PrimeIdealData& q) const;

    const QuotientRingMod4& quotient_mod4() const;

  private:
    void validate();
    NumberFieldData data_;
    int d_;
    std::vector<std::vector<Rat>> basis_inv_;             // power -> basis coords
    std::vector<std::vector<std::vector<Int>>> struct_;   // w_i w_j in basis coords
    std::vector<Rat> one_coords_;
    Int index_;  // [O_K : Z[alpha]]
    bool irreducible_certified_ = false;
    std::vector<FieldElement> units_;
    std::vector<FieldElement> rk_units_;
    mutable std::vector<RealInterval> roots_;  // isolating, refined on demand
    mutable long root_prec_ = 0;
    mutable std::unique_ptr<QuotientRingMod4> mod4_;
    friend class QuotientRingMod4;
};

}  // namespace fk

#endif
