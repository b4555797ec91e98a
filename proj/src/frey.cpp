#include "fermatkit/frey.hpp"

#include <algorithm>

#include "fermatkit/units.hpp"

namespace fk {

CurveInvariants invariants_from_powers(const FieldElement& s, const FieldElement& t) {
    const NumberField& K = *s.field;
    FieldElement w = K.neg(K.add(s, t));
    CurveInvariants out;
    FieldElement s2 = K.mul(s, s), t2 = K.mul(t, t), st = K.mul(s, t);
    out.c4 = K.mul(K.from_rational(Rat(16)), K.add(K.add(s2, st), t2));
    FieldElement d1 = K.sub(s, t), d2 = K.sub(t, w), d3 = K.sub(w, s);
    out.c6 = K.mul(K.from_rational(Rat(-32)), K.mul(K.mul(d1, d2), d3));
    FieldElement stw = K.mul(st, w);
    out.delta = K.mul(K.from_rational(Rat(16)), K.mul(stw, stw));
    // c4^3 - c6^2 = 1728 delta must hold identically
    FieldElement lhs = K.sub(K.pow(out.c4, 3), K.mul(out.c6, out.c6));
    FieldElement rhs = K.mul(K.from_rational(Rat(1728)), out.delta);
    if (!(lhs == rhs)) fail_internal("c4^3 - c6^2 != 1728 delta");
    return out;
}

namespace {

void check_coprime(const NumberField& K, const FieldElement& a, const FieldElement& b,
                   const FieldElement& c) {
    Rat na = K.norm(a), nb = K.norm(b), nc = K.norm(c);
    Int g = int_gcd(Int(na.get_num()), int_gcd(Int(nb.get_num()), Int(nc.get_num())));
    if (g == 1 || g == -1) return;
    for (const auto& [p, e] : factor_integer(g)) {
        (void)e;
        for (const auto& q : K.dedekind_factor(p)) {
            if (!q.gen_poly) fail_data("cannot verify coprimality at an external prime");
            const auto& F = *q.residue_field;
            if (F.is_zero(K.reduce_mod_prime(a, q)) &&
                F.is_zero(K.reduce_mod_prime(b, q)) &&
                F.is_zero(K.reduce_mod_prime(c, q)))
                fail_input("triple is not coprime (common prime above " + p.get_str() +
                           ")");
        }
    }
}

}  // namespace

FreyInvariants frey_invariants(const FieldElement& a, const FieldElement& b,
                               const FieldElement& c, const Int& p) {
    const NumberField& K = *a.field;
    if (!is_probable_prime(p) || p < 3) fail_input("exponent must be an odd prime");
    if (a.is_zero() || b.is_zero() || c.is_zero())
        fail_input("degenerate triple: abc = 0");
    if (!a.is_integral() || !b.is_integral() || !c.is_integral())
        fail_input("triple must be integral");
    FieldElement ap = K.pow(a, p), bp = K.pow(b, p), cp = K.pow(c, p);
    if (!K.add(K.add(ap, bp), cp).is_zero())
        fail_input("a^p + b^p + c^p != 0");
    check_coprime(K, a, b, c);

    FreyInvariants out;
    out.a = a;
    out.b = b;
    out.c = c;
    out.p = p;
    out.inv = invariants_from_powers(ap, bp);
    out.v_c4 = K.v_L(out.inv.c4);
    out.v_c6 = out.inv.c6.is_zero() ? -1 : K.v_L(out.inv.c6);
    out.v_delta = K.v_L(out.inv.delta);
    return out;
}

NormalizedSolution normalize_solution(const NumberField& K, const FieldElement& a,
                                      const FieldElement& b, const FieldElement& c,
                                      const Int& p) {
    const int d = K.degree();
    if (p <= 4 * d) fail_input("normalization requires p > 4d");
    if (!K.two_totally_ramified())
        fail_input(K.label() + ": 2 is not totally ramified");
    if (a.is_zero() || b.is_zero() || c.is_zero()) fail_input("degenerate triple");
    if (!a.is_integral() || !b.is_integral() || !c.is_integral())
        fail_input("triple must be integral");

    // exactly one of a, b, c lies in L (the residue field is F_2)
    FieldElement x = a, y = b, z = c;
    std::string perm = "(a,b,c)";
    long va = K.v_L(a), vb = K.v_L(b), vc = K.v_L(c);
    int divisible = (va > 0) + (vb > 0) + (vc > 0);
    if (divisible != 1)
        fail_input("exactly one of a, b, c must be divisible by the prime above 2");
    if (va > 0) {
        std::swap(x, y);
        perm = "(b,a,c)";
    } else if (vc > 0) {
        std::swap(y, z);
        perm = "(a,c,b)";
    }

    NormalizedSolution out;
    out.eps = find_normalizing_unit(K, x);
    out.a = K.mul(out.eps, x);
    out.b = K.mul(out.eps, y);
    out.c = K.mul(out.eps, z);
    out.permutation = perm;
    out.v_abc = K.v_L(K.mul(K.mul(out.a, out.b), out.c));

    FieldElement sp = K.pow(out.a, p), tp = K.pow(out.b, p);
    out.inv = invariants_from_powers(sp, tp);

    // (W): Y^2 + XY = X^3 + ((b^p - a^p - 1)/4) X^2 - (ab)^p/16 X
    FieldElement a2_num = K.sub(K.sub(tp, sp), K.one());
    FieldElement a4_num = K.mul(sp, tp);
    FieldElement a2 = K.mul(K.from_rational(Rat(1, 4)), a2_num);
    FieldElement a4 = K.mul(K.from_rational(Rat(-1, 16)), a4_num);
    out.w_model_integral = a2.is_integral() && a4.is_integral();

    out.v_c4_w = K.v_L(out.inv.c4) - 4 * d;
    out.v_delta_w = K.v_L(out.inv.delta) - 12 * d;
    out.multiplicative_at_L = (out.v_c4_w == 0) && (out.v_delta_w > 0);
    if (!out.w_model_integral || !out.multiplicative_at_L)
        fail_internal("normalization did not yield a multiplicative (W)-model");
    return out;
}

ValuationChainReport lemma14_chain(const NumberField& K, const FieldElement& s,
                                   const FieldElement& t, const FieldElement& w) {
    const int d = K.degree();
    if (d != 4) fail_input("valuation chain requires a quartic field");
    if (!K.two_totally_ramified())
        fail_input(K.label() + ": 2 is not totally ramified");
    if (!K.add(K.add(s, t), w).is_zero()) fail_input("powers must sum to zero");
    long vs = K.v_L(s), vt = K.v_L(t), vw = K.v_L(w);
    if (vs != 0 || vw != 0 || vt != 13)
        fail_input("valuation premises are v(s) = v(w) = 0, v(t) = 13");

    ValuationChainReport rep;
    // scale so that s = -1 mod 4 (an eps with eps^13 s = -1 mod 4 exists
    // because the 13th power map is bijective on the 2-group (O_K/4)^*)
    rep.eps = find_power_normalizing_unit(K, s, Int(13));
    FieldElement mu = K.pow(rep.eps, Int(13));
    FieldElement s2 = K.mul(mu, s), t2 = K.mul(mu, t), w2 = K.mul(mu, w);

    auto inv = invariants_from_powers(s2, t2);
    rep.v_c4 = K.v_L(inv.c4);
    rep.v_c6 = K.v_L(inv.c6);
    rep.v_delta = K.v_L(inv.delta);

    // x = alpha^4 X, y = alpha^6 Y + alpha^4 X drops (v(c4), v(c6), v(delta))
    // by (8, 12, 24); model coefficients must stay integral:
    //   a1 = 2/alpha^2, a2 = (t - s - 1)/alpha^4, a4 = -st/alpha^8
    FieldElement alpha = K.alpha();
    FieldElement al2 = K.mul(alpha, alpha);
    FieldElement al4 = K.mul(al2, al2);
    FieldElement al8 = K.mul(al4, al4);
    FieldElement a1 = K.mul(K.from_rational(Rat(2)), K.inverse(al2));
    FieldElement a2c = K.mul(K.sub(K.sub(t2, s2), K.one()), K.inverse(al4));
    FieldElement a4c = K.mul(K.neg(K.mul(s2, t2)), K.inverse(al8));
    rep.w_model_integral = a1.is_integral() && a2c.is_integral() && a4c.is_integral();

    rep.v_c4_w = rep.v_c4 - 8;
    rep.v_c6_w = rep.v_c6 - 12;
    rep.v_delta_w = rep.v_delta - 24;

    rep.annotations.push_back(
        "valuations (8,12,18): Kodaira type I6* if (W) is minimal at L, giving "
        "v_L(N) = 8");
    rep.annotations.push_back(
        "if (W) is not minimal the minimal triple is (4,6,6): type II (v_L(N) = 6) "
        "or type III (v_L(N) = 5); the tables leave both open");
    rep.conductor_exponent_set = {5, 6, 8};
    return rep;
}

long j_valuation_legendre(const NumberField& K, const FieldElement& lambda) {
    if (lambda.is_zero() || lambda == K.one())
        fail_input("Legendre parameter must avoid 0 and 1");
    FieldElement mu = K.sub(K.one(), lambda);
    FieldElement lm = K.mul(lambda, mu);
    FieldElement num = K.sub(K.one(), lm);
    FieldElement j = K.mul(K.from_rational(Rat(256)),
                           K.mul(K.pow(num, 3), K.inverse(K.mul(lm, lm))));
    return K.v_L(j);
}

long j_valuation_from_invariants(const NumberField& K, const CurveInvariants& inv) {
    if (inv.delta.is_zero()) fail_input("singular curve has no j-invariant");
    return 3 * K.v_L(inv.c4) - K.v_L(inv.delta);
}

FsWitness fs_witness_check(const NumberField& K, const FieldElement& a) {
    if (a.is_zero() || a == K.one()) fail_input("witness must avoid 0 and 1");
    const int d = K.degree();
    FsWitness out;
    out.a = a;
    out.b = K.sub(K.one(), a);
    out.threshold = 4L * d;

    auto is_pm_two_power = [](const Rat& n) {
        Int num = n.get_num(), den = n.get_den();
        auto two_power = [](Int v) {
            if (v < 0) v = -v;
            if (v == 0) return false;
            while (mpz_even_p(v.get_mpz_t())) v >>= 1;
            return v == 1;
        };
        return two_power(num) && (den == 1 || two_power(den));
    };
    out.in_S = is_pm_two_power(K.norm(a)) && is_pm_two_power(K.norm(out.b));
    out.v_L_a = K.v_L(a);
    if (!out.in_S) return out;

    out.fs_violated = std::abs(out.v_L_a) > out.threshold;
    if (!out.fs_violated) return out;

    // build the conductor-L curve: y^2 = x(x-a)(x+b), via 1/a when v < 0
    FieldElement aa = a, bb = out.b;
    if (out.v_L_a < 0) {
        out.used_inverse_transform = true;
        aa = K.inverse(a);
        bb = K.sub(K.one(), aa);
    }
    // c4 = 16(a^2 + ab + b^2), delta = 16 (ab)^2
    FieldElement ab = K.mul(aa, bb);
    FieldElement c4 = K.mul(K.from_rational(Rat(16)),
                            K.add(K.add(K.mul(aa, aa), ab), K.mul(bb, bb)));
    FieldElement delta = K.mul(K.from_rational(Rat(16)), K.mul(ab, ab));
    out.v_c4_w = K.v_L(c4) - 4 * d;
    out.v_delta_w = K.v_L(delta) - 12 * d;
    out.conductor_is_L = (out.v_c4_w == 0) && (out.v_delta_w > 0);
    return out;
}

AqResult aq_of_curve(const FieldElement& s, const FieldElement& t,
                     const PrimeIdealData& q) {
    if (q.p == 2) fail_input("a_q is only computed away from the prime above 2");
    if (!q.gen_poly || !q.residue_field)
        fail_data("prime carries no residue-field data");
    const NumberField& K = *s.field;
    const FiniteField& F = *q.residue_field;
    auto sbar = K.reduce_mod_prime(s, q);
    auto tbar = K.reduce_mod_prime(t, q);
    AqResult out;
    auto st = F.mul(sbar, tbar);
    auto spt = F.add(sbar, tbar);
    if (F.is_zero(st) || F.is_zero(spt)) {
        out.good_reduction = false;  // multiplicative branch: a_q = +-(N(q)+1)
        return out;
    }
    out.good_reduction = true;
    out.point_count = count_points_legendre(sbar, tbar, F);
    out.a_q = q.norm + 1 - out.point_count;
    // Hasse bound and the full-2-torsion congruence
    if (out.a_q * out.a_q > 4 * q.norm) fail_internal("Hasse bound violated");
    Int diff = out.a_q - (q.norm + 1);
    if (!mpz_divisible_ui_p(diff.get_mpz_t(), 4))
        fail_internal("a_q != Norm(q)+1 mod 4 despite full 2-torsion");
    return out;
}

PowerResiduePairs power_residue_pairs(const PrimeIdealData& q, const Int& p) {
    if (!q.residue_field) fail_data("prime carries no residue-field data");
    const FiniteField& F = *q.residue_field;
    const Int order = F.order() - 1;
    PowerResiduePairs out;
    std::vector<std::uint64_t> residues;
    {
        std::vector<char> seen(F.order().get_ui(), 0);
        const std::uint64_t n = F.order().get_ui();
        for (std::uint64_t i = 1; i < n; ++i) {
            auto e = F.elem_at(i);
            if (F.is_zero(e)) continue;
            auto pw = F.pow(e, p);
            auto idx = F.index_of(pw);
            if (!seen[idx]) {
                seen[idx] = 1;
                residues.push_back(idx);
            }
        }
    }
    std::sort(residues.begin(), residues.end());
    for (auto r : residues) out.residues.emplace_back(static_cast<unsigned long>(r));

    std::vector<char> is_res(F.order().get_ui(), 0);
    for (auto r : residues) is_res[r] = 1;
    for (auto s_idx : residues)
        for (auto t_idx : residues) {
            auto s = F.elem_at(s_idx), t = F.elem_at(t_idx);
            auto sum = F.add(s, t);
            if (F.is_zero(sum)) continue;
            auto mw = F.neg(sum);
            if (!is_res[F.index_of(mw)]) continue;
            out.pairs.emplace_back(Int(static_cast<unsigned long>(s_idx)),
                                   Int(static_cast<unsigned long>(t_idx)));
        }
    return out;
}

}  // namespace fk
