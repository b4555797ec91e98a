#ifndef FERMATKIT_BIGINT_HPP
#define FERMATKIT_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "fermatkit/errors.hpp"

namespace fk {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_sqrt_exact(const Int& a) {
    if (a < 0) fail_input("square root of a negative integer");
    Int r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t());
    if (rem != 0) fail_input("integer is not a perfect square");
    return r;
}

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// 2-adic (or p-adic) valuation of a nonzero integer
inline long valuation(const Int& n, const Int& p) {
    if (n == 0) fail_input("valuation of zero");
    long v = 0;
    Int m = n, q, r;
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        m = q;
        ++v;
    }
}

// valuation of a nonzero rational
inline long valuation(const Rat& x, const Int& p) {
    if (x == 0) fail_input("valuation of zero");
    return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

// prime factorization by trial division (values in this project stay modest;
// any large leftover cofactor must itself be prime)
inline std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
    std::vector<std::pair<Int, unsigned>> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    Int p = 3;
    while (p * p <= n && p < 2000000) {
        strip(p);
        p += 2;
        if (is_probable_prime(n)) break;
    }
    if (n > 1) {
        if (!is_probable_prime(n))
            fail_internal("factor_integer: composite cofactor " + n.get_str());
        strip(n);
    }
    return out;
}

// exact rationals print as "n" or "n/d"; this is the wire format everywhere
inline std::string rat_to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) fail_input("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) fail_input("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

}  // namespace fk

#endif
