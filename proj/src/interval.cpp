#include "fermatkit/interval.hpp"

#include <algorithm>
#include <deque>

namespace fk {

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    Rat lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rat hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return {lo, hi};
}

static Rat round_dir(const Rat& v, long scale_bits, bool up) {
    // floor/ceil of v * 2^scale, divided back
    Int num = v.get_num(), den = v.get_den();
    if (scale_bits >= 0)
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(),
                     static_cast<unsigned long>(scale_bits));
    else
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
                     static_cast<unsigned long>(-scale_bits));
    Int q;
    if (up)
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rat r(q);
    if (scale_bits >= 0) {
        Int pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(scale_bits));
        r /= Rat(pow2);
    } else {
        Int pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(-scale_bits));
        r *= Rat(pow2);
    }
    return r;
}

static long mag_bits(const Rat& v) {
    if (v == 0) return 0;
    Int num = abs(Int(v.get_num())), den = Int(v.get_den());
    return static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
}

RealInterval RealInterval::round_out(long prec_bits) const {
    long e = std::max(mag_bits(lo), mag_bits(hi));
    long scale = prec_bits - e;
    return {round_dir(lo, scale, /*up=*/false), round_dir(hi, scale, /*up=*/true)};
}

RealInterval eval_on_interval(const std::vector<Rat>& c, const RealInterval& x) {
    RealInterval acc = RealInterval::point(Rat(0));
    for (size_t i = c.size(); i-- > 0;)
        acc = acc * x + RealInterval::point(c[i]);
    return acc;
}

// ---------------------------------------------------------------------------
// Sturm machinery
// ---------------------------------------------------------------------------

static std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
    std::vector<IntPoly> seq;
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        auto [q, r] = divmod(to_rat(seq[seq.size() - 2]), to_rat(seq.back()));
        (void)q;
        if (r.is_zero()) break;
        // clear denominators by a positive constant, then negate
        Int den = 1;
        for (const auto& v : r.coeffs()) {
            Int d = v.get_den();
            den = den / int_gcd(den, d) * d;
        }
        std::vector<Int> ic;
        for (const auto& v : r.coeffs()) ic.emplace_back(Rat(v * den).get_num());
        IntPoly ir(std::move(ic));
        Int cont = content(ir);
        std::vector<Int> rc;
        for (const auto& v : ir.coeffs()) rc.push_back(-(v / cont));
        seq.push_back(IntPoly(std::move(rc)));
    }
    return seq;
}

static int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

static int variations_at(const std::vector<IntPoly>& seq, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& s : seq) {
        if (s.is_zero()) continue;
        int sg = sign_of(s.eval(x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

static Int cauchy_bound(const IntPoly& p) {
    Rat m(0);
    Rat lead(abs(p.lc()));
    for (int i = 0; i < p.degree(); ++i) {
        Rat t = Rat(abs(p[static_cast<size_t>(i)])) / lead;
        if (t > m) m = t;
    }
    Rat b = m + 1;
    Int bi = b.get_num() / b.get_den() + 1;
    return bi;
}

int count_real_roots(const IntPoly& p) {
    IntPoly sf = squarefree_part(p);
    if (sf.degree() == 0) return 0;
    auto seq = sturm_sequence(sf);
    Int b = cauchy_bound(sf);
    return variations_at(seq, Rat(-b)) - variations_at(seq, Rat(b));
}

std::vector<RealInterval> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) fail_input("cannot isolate roots of the zero polynomial");
    IntPoly sf = squarefree_part(p);
    std::vector<RealInterval> out;
    if (sf.degree() == 0) return out;
    auto seq = sturm_sequence(sf);
    Int b = cauchy_bound(sf);
    auto count_in = [&](const Rat& a, const Rat& c) {
        return variations_at(seq, a) - variations_at(seq, c);
    };
    std::deque<std::pair<Rat, Rat>> work{{Rat(-b), Rat(b)}};
    while (!work.empty()) {
        auto [a, c] = work.front();
        work.pop_front();
        int n = count_in(a, c);  // roots in (a, c]
        if (n == 0) continue;
        if (n == 1 && sign_of(sf.eval(a)) * sign_of(sf.eval(c)) < 0) {
            out.emplace_back(a, c);
            continue;
        }
        Rat m = (a + c) / 2;
        if (sf.eval(m) == 0) {
            out.push_back(RealInterval::point(m));
            // shrink flanks off the exact root before recursing
            Rat eps = (c - a) / 4;
            while (count_in(m - eps, m) > 1 || count_in(m, m + eps) > 0 ||
                   sf.eval(m - eps) == 0 || sf.eval(m + eps) == 0)
                eps /= 2;
            work.emplace_back(a, m - eps);
            work.emplace_back(m + eps, c);
        } else {
            work.emplace_back(a, m);
            work.emplace_back(m, c);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RealInterval& x, const RealInterval& y) { return x.lo < y.lo; });
    return out;
}

RealInterval refine_root(const IntPoly& p, RealInterval iv, long prec_bits) {
    if (iv.lo == iv.hi) return iv;
    IntPoly sf = squarefree_part(p);
    int slo = sign_of(sf.eval(iv.lo));
    int shi = sign_of(sf.eval(iv.hi));
    if (slo == 0 || shi == 0 || slo == shi)
        fail_internal("refine_root: not an isolating interval");
    auto small_enough = [&](const RealInterval& v) {
        long e = std::max(mag_bits(v.lo), mag_bits(v.hi));
        if (e < 0) e = 0;
        return mag_bits(v.width()) < e - prec_bits;
    };
    while (!small_enough(iv)) {
        Rat m = iv.mid();
        int sm = sign_of(sf.eval(m));
        if (sm == 0) return RealInterval::point(m);
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

}  // namespace fk
