#ifndef FERMATKIT_NEWFORM_HPP
#define FERMATKIT_NEWFORM_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fermatkit/number_field.hpp"

namespace fk {

struct HeckeField {
    IntPoly min_poly;  // monic, degree >= 1; degree 1 means Q
    int degree() const { return min_poly.degree(); }
};

// elements of Q(beta) as coefficient vectors over the power basis of beta
using HeckeElem = std::vector<Rat>;

HeckeElem hecke_mul(const HeckeField& H, const HeckeElem& a, const HeckeElem& b);
HeckeElem hecke_from_rat(const HeckeField& H, const Rat& r);
Rat hecke_norm(const HeckeField& H, const HeckeElem& a);
bool hecke_is_rational(const HeckeField& H, const HeckeElem& a);

struct EigenvalueKey {
    Int p;
    int f = 1;
    int factor_index = 0;
    Int norm() const { return int_pow(p, static_cast<unsigned long>(f)); }
};

struct NewformRecord {
    std::string label;
    std::string field_label;
    Int level_norm = 2;
    std::optional<HeckeField> hecke;  // absent for structure-only records
    int hecke_degree = 1;
    int orbit_size = 1;
    std::vector<std::pair<EigenvalueKey, HeckeElem>> eigenvalues;
    std::string notes;

    bool is_rational() const { return hecke_degree == 1; }
    const HeckeElem* eigenvalue(const EigenvalueKey& k) const;
};

// verify the per-embedding Weil bound |sigma(a_q)| <= 2 sqrt(Norm q) for
// records with a totally real Hecke field
void verify_weil_bounds(const NewformRecord& form);

// all t with |t| <= 2 sqrt(norm) and t = norm + 1 mod 4, ascending
std::vector<Int> a_q_set(const Int& q_norm);

enum class FormStatus { witness_found, nonrational, inconclusive };

struct FormScan {
    std::string label;
    FormStatus status = FormStatus::inconclusive;
    std::optional<EigenvalueKey> witness;  // for witness_found
    std::optional<Int> witness_aq;         // rational a_q at the witness
};

struct ConditionCReport {
    int total_forms = 0;     // counted with orbit sizes
    int rational_forms = 0;  // orbit representatives with Q_f = Q
    std::vector<FormScan> scans;
    bool satisfied = false;    // every rational form has a witness
    bool vacuous = false;      // no rational forms at all
};

ConditionCReport condition_c_scan(const std::vector<NewformRecord>& forms);

struct ObstructionReport {
    std::string form_label;
    EigenvalueKey q;
    std::vector<Int> A_q;
    HeckeElem B;          // in Q(beta)
    Int norm_B;           // over Q
    std::vector<Int> survivor_primes;  // primes of norm_B and of Norm(q)
    bool B_is_zero = false;
};

ObstructionReport b_fq(const NewformRecord& form, const EigenvalueKey& q);

struct SurvivorReport {
    std::string form_label;
    std::vector<ObstructionReport> per_prime;
    std::set<Int> survivors;  // intersection over the supplied primes
    bool method_failed = false;  // every B vanished
};

SurvivorReport survivor_primes(const NewformRecord& form,
                               const std::vector<EigenvalueKey>& primes);

}  // namespace fk

#endif
