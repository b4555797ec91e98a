#ifndef FERMATKIT_FREY_HPP
#define FERMATKIT_FREY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fermatkit/number_field.hpp"

namespace fk {

// standard invariants of y^2 = x(x-s)(x+t), with w = -(s+t):
//   c4 = 16(s^2 + st + t^2),  c6 = -32(s-t)(t-w)(w-s),  delta = 16(stw)^2
struct CurveInvariants {
    FieldElement c4, c6, delta;
};

CurveInvariants invariants_from_powers(const FieldElement& s, const FieldElement& t);

struct FreyInvariants {
    FieldElement a, b, c;
    Int p;
    CurveInvariants inv;
    long v_c4 = 0, v_c6 = 0, v_delta = 0;  // L-adic valuations (v of 0 reported as -1)
};

// full Frey data from a Fermat triple; verifies a^p + b^p + c^p = 0,
// abc != 0, integrality and coprimality
FreyInvariants frey_invariants(const FieldElement& a, const FieldElement& b,
                               const FieldElement& c, const Int& p);

struct NormalizedSolution {
    FieldElement a, b, c;      // permuted and unit-scaled, L | b
    FieldElement eps;          // the scaling unit
    std::string permutation;
    long v_abc = 0;
    CurveInvariants inv;       // of the scaled triple's powers
    long v_c4_w = 0, v_delta_w = 0;  // valuations on the (W)-model
    bool w_model_integral = false;
    bool multiplicative_at_L = false;  // v(c4(W)) = 0 and v(Delta(W)) > 0
};

// Fermat-solution normalization: permute so L | b, scale so (eps a)^p = -1
// mod 4, and certify multiplicative reduction at L on the (W)-model
// x = 4X, y = 8Y + 4X.  The Fermat relation itself is not needed for the
// valuation bookkeeping, so synthetic triples exercise this too.
NormalizedSolution normalize_solution(const NumberField& K, const FieldElement& a,
                                      const FieldElement& b, const FieldElement& c,
                                      const Int& p);

struct ValuationChainReport {
    FieldElement eps;
    long v_c4 = 0, v_c6 = 0, v_delta = 0;        // before alpha^4-scaling
    long v_c4_w = 0, v_c6_w = 0, v_delta_w = 0;  // after x = alpha^4 X
    bool w_model_integral = false;
    std::vector<std::string> annotations;         // Kodaira-type notes per triple
    std::vector<int> conductor_exponent_set;      // possible v_L(N)
};

// the degree-4, p = 13 chain: premises v_L(s t w) with v(t) = 13 (one unit of
// v per factor of the underlying triple), s + t + w = 0, and s scaled so
// s = -1 mod 4; inputs are the p-th powers themselves
ValuationChainReport lemma14_chain(const NumberField& K, const FieldElement& s,
                                   const FieldElement& t, const FieldElement& w);

// v_L of the modular invariant: from a Legendre parameter lambda (j =
// 2^8 (1 - lm)^3 / (lm)^2 with m = 1 - lambda) or from curve invariants
long j_valuation_legendre(const NumberField& K, const FieldElement& lambda);
long j_valuation_from_invariants(const NumberField& K, const CurveInvariants& inv);

struct FsWitness {
    FieldElement a, b;   // b = 1 - a
    bool in_S = false;   // Norm(a), Norm(1-a) both +-2^k
    long v_L_a = 0;
    long threshold = 0;  // 4d
    bool fs_violated = false;  // |v_L(a)| > 4d
    // for violations: the curve y^2 = x(x-a)(x+b) (or the 1/a transform)
    bool used_inverse_transform = false;
    long v_c4_w = 0, v_delta_w = 0;
    bool conductor_is_L = false;  // v(c4(W)) = 0, v(Delta(W)) > 0
};

FsWitness fs_witness_check(const NumberField& K, const FieldElement& a);

struct AqResult {
    bool good_reduction = false;
    Int point_count;  // when good
    Int a_q;          // when good
};

// trace of Frobenius for y^2 = x(x-s)(x+t) at a prime of good reduction;
// signals the multiplicative branch (a_q = +-(Norm q + 1)) otherwise
AqResult aq_of_curve(const FieldElement& s, const FieldElement& t,
                     const PrimeIdealData& q);

struct PowerResiduePairs {
    std::vector<Int> residues;                    // p-th powers in F_q^*
    std::vector<std::pair<Int, Int>> pairs;       // (s, t), s+t+u = 0 solvable
};

// p-th power residues at q and the ordered pairs (s, t) with s, t, -(s+t)
// all p-th powers and s t (s+t) != 0; residues reported as integers for
// degree-1 primes (indices otherwise)
PowerResiduePairs power_residue_pairs(const PrimeIdealData& q, const Int& p);

}  // namespace fk

#endif
