#include "fermatkit/newform.hpp"

#include <algorithm>

#include "fermatkit/interval.hpp"

namespace fk {

HeckeElem hecke_mul(const HeckeField& H, const HeckeElem& a, const HeckeElem& b) {
    const int n = H.degree();
    std::vector<Rat> conv(2 * static_cast<size_t>(n) - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) conv[i + j] += a[i] * b[j];
    for (size_t k = conv.size(); k-- > static_cast<size_t>(n);) {
        Rat lead = conv[k];
        if (lead == 0) continue;
        conv[k] = 0;
        for (int i = 0; i < n; ++i)
            conv[k - static_cast<size_t>(n) + static_cast<size_t>(i)] -=
                lead * Rat(H.min_poly[static_cast<size_t>(i)]);
    }
    conv.resize(static_cast<size_t>(n));
    return conv;
}

HeckeElem hecke_from_rat(const HeckeField& H, const Rat& r) {
    HeckeElem e(static_cast<size_t>(H.degree()), Rat(0));
    e[0] = r;
    return e;
}

Rat hecke_norm(const HeckeField& H, const HeckeElem& a) {
    // Norm(g(beta)) = Res(min_poly, g) for monic min_poly, up to the
    // denominator of g
    Int den(1);
    for (const auto& c : a) {
        Int d = c.get_den();
        den = den / int_gcd(den, d) * d;
    }
    std::vector<Int> ic;
    for (const auto& c : a) ic.emplace_back(Rat(c * den).get_num());
    IntPoly g(std::move(ic));
    if (g.is_zero()) return Rat(0);
    Int res = resultant(H.min_poly, g);
    Rat out(res);
    out /= Rat(int_pow(den, static_cast<unsigned long>(H.degree())));
    out.canonicalize();
    return out;
}

bool hecke_is_rational(const HeckeField& H, const HeckeElem& a) {
    (void)H;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

const HeckeElem* NewformRecord::eigenvalue(const EigenvalueKey& k) const {
    for (const auto& [key, val] : eigenvalues)
        if (key.p == k.p && key.f == k.f && key.factor_index == k.factor_index)
            return &val;
    return nullptr;
}

void verify_weil_bounds(const NewformRecord& form) {
    if (!form.hecke) return;
    const HeckeField& H = *form.hecke;
    const int n = H.degree();
    if (count_real_roots(H.min_poly) != n) return;  // CM field: skip
    auto roots = isolate_real_roots(H.min_poly);
    for (const auto& [key, aq] : form.eigenvalues) {
        Int bound = 4 * key.norm();
        for (long prec = 32; prec <= (1L << 12); prec *= 2) {
            bool all_certified = true;
            for (auto r : roots) {
                r = refine_root(H.min_poly, r, prec);
                auto v = eval_on_interval(aq, r);
                auto sq = v * v;
                if (!(sq.hi < Rat(bound) || sq.hi == Rat(bound))) {
                    all_certified = false;
                    break;
                }
            }
            if (all_certified) {
                bound = -1;  // certified marker
                break;
            }
        }
        if (bound != -1)
            fail_input(form.label + ": eigenvalue at norm " + key.norm().get_str() +
                       " violates the Weil bound in some real embedding");
    }
}

std::vector<Int> a_q_set(const Int& q_norm) {
    if (q_norm < 3 || mpz_even_p(q_norm.get_mpz_t()))
        fail_input("a_q_set expects an odd prime power norm >= 3");
    std::vector<Int> out;
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(4 * q_norm).get_mpz_t());  // floor(2 sqrt N)
    Int target = (q_norm + 1) % 4;
    for (Int t = -bound; t <= bound; ++t) {
        Int r = t % 4;
        if (r < 0) r += 4;
        if (r == target) out.push_back(t);
    }
    return out;
}

ConditionCReport condition_c_scan(const std::vector<NewformRecord>& forms) {
    ConditionCReport rep;
    for (const auto& form : forms) {
        if (form.level_norm != 2)
            fail_input(form.label + ": condition scan expects level norm 2");
        rep.total_forms += form.orbit_size;
        FormScan scan;
        scan.label = form.label;
        if (!form.is_rational()) {
            scan.status = FormStatus::nonrational;
        } else {
            ++rep.rational_forms;
            scan.status = FormStatus::inconclusive;
            for (const auto& [key, aq] : form.eigenvalues) {
                if (!form.hecke || !hecke_is_rational(*form.hecke, aq))
                    fail_input(form.label + ": rational form with non-rational entry");
                Rat a0 = aq.empty() ? Rat(0) : aq[0];
                if (!is_integer(a0))
                    fail_input(form.label + ": eigenvalue is not an algebraic integer");
                Int a(a0.get_num());
                Int diff = a - (key.norm() + 1);
                Int r = diff % 4;
                if (r != 0) {
                    scan.status = FormStatus::witness_found;
                    scan.witness = key;
                    scan.witness_aq = a;
                    break;
                }
            }
        }
        rep.scans.push_back(std::move(scan));
    }
    rep.vacuous = (rep.rational_forms == 0);
    rep.satisfied = std::none_of(
        rep.scans.begin(), rep.scans.end(),
        [](const FormScan& s) { return s.status == FormStatus::inconclusive; });
    return rep;
}

ObstructionReport b_fq(const NewformRecord& form, const EigenvalueKey& q) {
    const HeckeElem* aq = form.eigenvalue(q);
    if (!aq)
        fail_data(form.label + ": no eigenvalue supplied at p = " + q.p.get_str() +
                  ", f = " + std::to_string(q.f));
    if (!form.hecke)
        fail_data(form.label + ": structure-only record has no Hecke field");
    const HeckeField& H = *form.hecke;

    ObstructionReport rep;
    rep.form_label = form.label;
    rep.q = q;
    const Int N = q.norm();
    rep.A_q = a_q_set(N);

    // B = N ((N+1)^2 - a^2) prod_{t in A} (t - a)
    HeckeElem acc = hecke_from_rat(H, Rat(N));
    HeckeElem asq = hecke_mul(H, *aq, *aq);
    HeckeElem term = hecke_from_rat(H, Rat((N + 1) * (N + 1)));
    for (size_t i = 0; i < term.size(); ++i) term[i] -= asq[i];
    acc = hecke_mul(H, acc, term);
    for (const auto& t : rep.A_q) {
        HeckeElem lin = hecke_from_rat(H, Rat(t));
        for (size_t i = 0; i < lin.size(); ++i) lin[i] -= (*aq)[i];
        acc = hecke_mul(H, acc, lin);
    }
    rep.B = acc;
    Rat nb = hecke_norm(H, acc);
    if (!is_integer(nb))
        fail_internal(form.label + ": obstruction norm is not an integer");
    rep.norm_B = Int(nb.get_num());
    rep.B_is_zero = std::all_of(acc.begin(), acc.end(),
                                [](const Rat& c) { return c == 0; });

    if (!rep.B_is_zero) {
        std::set<Int> primes;
        for (const auto& [p, e] : factor_integer(rep.norm_B)) {
            (void)e;
            primes.insert(p);
        }
        primes.insert(q.p);  // the q | p branch
        rep.survivor_primes.assign(primes.begin(), primes.end());
    }
    return rep;
}

SurvivorReport survivor_primes(const NewformRecord& form,
                               const std::vector<EigenvalueKey>& primes) {
    if (primes.empty()) fail_input("survivor scan needs at least one prime");
    SurvivorReport rep;
    rep.form_label = form.label;
    bool first = true;
    bool any_nonzero = false;
    for (const auto& q : primes) {
        auto ob = b_fq(form, q);
        if (!ob.B_is_zero) {
            any_nonzero = true;
            std::set<Int> cur(ob.survivor_primes.begin(), ob.survivor_primes.end());
            if (first) {
                rep.survivors = cur;
                first = false;
            } else {
                std::set<Int> inter;
                std::set_intersection(rep.survivors.begin(), rep.survivors.end(),
                                      cur.begin(), cur.end(),
                                      std::inserter(inter, inter.begin()));
                rep.survivors = std::move(inter);
            }
        }
        rep.per_prime.push_back(std::move(ob));
    }
    rep.method_failed = !any_nonzero;
    if (rep.method_failed) rep.survivors.clear();
    return rep;
}

}  // namespace fk
