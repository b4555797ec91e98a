#ifndef FERMATKIT_INTERVAL_HPP
#define FERMATKIT_INTERVAL_HPP

#include <vector>

#include "fermatkit/poly.hpp"

namespace fk {

// Closed interval with exact rational endpoints.  Sums and products of
// exact rationals are exact, so arithmetic here encloses trivially; rounding
// only ever happens through round_out, which widens.
struct RealInterval {
    Rat lo, hi;

    RealInterval() : lo(0), hi(0) {}
    RealInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) fail_internal("interval endpoints out of order");
    }
    static RealInterval point(const Rat& v) { return RealInterval(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    // -1, 0 (straddles), +1
    int sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator*(const Rat& s, const RealInterval& a) {
        return s >= 0 ? RealInterval(s * a.lo, s * a.hi)
                      : RealInterval(s * a.hi, s * a.lo);
    }

    // widen endpoints outward to ~prec significant bits (keeps the exact
    // value inside while stopping denominator growth in long products)
    RealInterval round_out(long prec_bits) const;
};

RealInterval eval_on_interval(const std::vector<Rat>& ascending_coeffs,
                              const RealInterval& x);

// disjoint isolating intervals for the real roots of p (p is replaced by its
// squarefree part first), sorted increasing; exact rational roots come back
// as degenerate [r, r] intervals
std::vector<RealInterval> isolate_real_roots(const IntPoly& p);

// number of distinct real roots by Sturm's theorem
int count_real_roots(const IntPoly& p);

// shrink an isolating interval until width <= 2^-prec_bits * max(1, |root|)
RealInterval refine_root(const IntPoly& p, RealInterval iv, long prec_bits);

}  // namespace fk

#endif
