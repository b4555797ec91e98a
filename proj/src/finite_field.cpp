#include "fermatkit/finite_field.hpp"

#include <random>

namespace fk {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addm(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powm(u64 a, Int e, u64 p) {
    u64 r = 1 % p, base = a % p;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mulm(r, base, p);
        base = mulm(base, base, p);
        e >>= 1;
    }
    return r;
}

u64 invm(u64 a, u64 p) { return powm(a, Int(p) - 2, p); }

// dense polynomials over F_p, ascending coefficients, trimmed
using MP = std::vector<u64>;

void mp_trim(MP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
int mp_deg(const MP& a) { return static_cast<int>(a.size()) - 1; }

MP mp_mul(const MP& a, const MP& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    MP c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = addm(c[i + j], mulm(a[i], b[j], p), p);
    }
    mp_trim(c);
    return c;
}

MP mp_sub(const MP& a, const MP& b, u64 p) {
    MP c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = subm(c[i], b[i], p);
    mp_trim(c);
    return c;
}

MP mp_mod(MP a, const MP& m, u64 p) {
    mp_trim(a);
    const int dm = mp_deg(m);
    u64 il = invm(m.back(), p);
    while (mp_deg(a) >= dm) {
        u64 f = mulm(a.back(), il, p);
        int shift = mp_deg(a) - dm;
        for (int j = 0; j <= dm; ++j)
            a[static_cast<size_t>(shift + j)] =
                subm(a[static_cast<size_t>(shift + j)],
                     mulm(f, m[static_cast<size_t>(j)], p), p);
        mp_trim(a);
    }
    return a;
}

MP mp_divexact(MP a, const MP& b, u64 p) {
    mp_trim(a);
    const int db = mp_deg(b);
    u64 il = invm(b.back(), p);
    MP q(a.size(), 0);
    while (mp_deg(a) >= db) {
        u64 f = mulm(a.back(), il, p);
        int shift = mp_deg(a) - db;
        q[static_cast<size_t>(shift)] = f;
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(shift + j)] =
                subm(a[static_cast<size_t>(shift + j)],
                     mulm(f, b[static_cast<size_t>(j)], p), p);
        mp_trim(a);
    }
    if (!a.empty()) fail_internal("inexact division mod p");
    mp_trim(q);
    return q;
}

MP mp_gcd(MP a, MP b, u64 p) {
    mp_trim(a);
    mp_trim(b);
    while (!b.empty()) {
        MP r = mp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 il = invm(a.back(), p);
        for (auto& c : a) c = mulm(c, il, p);
    }
    return a;
}

MP mp_powmod(const MP& a, Int e, const MP& m, u64 p) {
    MP r{1}, base = mp_mod(a, m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mp_mod(mp_mul(r, base, p), m, p);
        base = mp_mod(mp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

MP mp_monic(MP a, u64 p) {
    mp_trim(a);
    if (a.empty()) return a;
    u64 il = invm(a.back(), p);
    for (auto& c : a) c = mulm(c, il, p);
    return a;
}

MP mp_derivative(const MP& a, u64 p) {
    if (a.size() <= 1) return {};
    MP d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = mulm(a[i], i % p, p);
    mp_trim(d);
    return d;
}

// a = b(x^p) when a' == 0; over F_p the inverse Frobenius on coefficients is
// the identity
MP mp_pth_root(const MP& a, u64 p) {
    MP b;
    for (size_t i = 0; i < a.size(); i += static_cast<size_t>(p)) b.push_back(a[i]);
    return b;
}

struct WorkItem {
    MP poly;
    int mult;
};

// distinct-degree then equal-degree splitting of a squarefree monic poly
void ddf_edf(const MP& sf, int mult, u64 p, std::vector<std::pair<MP, int>>& out,
             std::mt19937_64& rng) {
    MP rem = sf;
    MP xp{0, 1};  // running x^(p^k) mod rem tracker, restarted per stage
    int k = 0;
    MP frob{0, 1};
    while (mp_deg(rem) > 0) {
        ++k;
        if (2 * k > mp_deg(rem)) {
            out.emplace_back(rem, mult);
            break;
        }
        frob = mp_powmod(frob, Int(p), rem, p);
        MP diff = mp_sub(frob, MP{0, 1}, p);
        MP g = mp_gcd(rem, diff, p);
        if (mp_deg(g) > 0) {
            // split g into its degree-k irreducible factors
            std::vector<MP> stack{g};
            while (!stack.empty()) {
                MP h = stack.back();
                stack.pop_back();
                if (mp_deg(h) == k) {
                    out.emplace_back(mp_monic(h, p), mult);
                    continue;
                }
                // Cantor-Zassenhaus split
                for (;;) {
                    MP r(static_cast<size_t>(mp_deg(h)), 0);
                    for (auto& c : r) c = rng() % p;
                    r.push_back(1);
                    MP d;
                    if (p == 2) {
                        // trace map x + x^2 + ... + x^(2^(k-1)) applied to r
                        MP acc = mp_mod(r, h, p), cur = acc;
                        for (int i = 1; i < k; ++i) {
                            cur = mp_mod(mp_mul(cur, cur, p), h, p);
                            acc = mp_sub(acc, cur, p);  // char 2: sub == add
                        }
                        d = mp_gcd(h, acc, p);
                    } else {
                        Int e = (int_pow(Int(p), static_cast<unsigned long>(k)) - 1) / 2;
                        MP t = mp_powmod(r, e, h, p);
                        t = mp_sub(t, MP{1}, p);
                        d = mp_gcd(h, t, p);
                    }
                    if (mp_deg(d) > 0 && mp_deg(d) < mp_deg(h)) {
                        stack.push_back(d);
                        stack.push_back(mp_divexact(h, d, p));
                        break;
                    }
                }
            }
            rem = mp_divexact(rem, g, p);
            frob = mp_mod(frob, rem, p);
        }
    }
}

}  // namespace

std::vector<std::pair<IntPoly, int>> factor_mod_p(const IntPoly& P, const Int& p) {
    if (!is_probable_prime(p)) fail_input("factor_mod_p: modulus is not prime");
    if (!p.fits_ulong_p()) fail_input("factor_mod_p: prime too large");
    const u64 pp = p.get_ui();

    MP a;
    for (const auto& c : P.coeffs()) {
        Int r = c % p;
        if (r < 0) r += p;
        a.push_back(r.get_ui());
    }
    mp_trim(a);
    if (a.empty()) fail_input("factor_mod_p: polynomial vanishes mod p");
    a = mp_monic(a, pp);

    std::mt19937_64 rng(0x5eedf00du);  // reproducible splitting elements
    std::vector<std::pair<MP, int>> factors;

    // squarefree decomposition, handling p-th powers
    std::vector<WorkItem> work{{a, 1}};
    while (!work.empty()) {
        auto [f, mult] = work.back();
        work.pop_back();
        if (mp_deg(f) <= 0) continue;
        MP d = mp_derivative(f, pp);
        if (d.empty()) {
            work.push_back({mp_pth_root(f, pp), mult * static_cast<int>(pp)});
            continue;
        }
        MP g = mp_gcd(f, d, pp);
        MP w = mp_divexact(f, g, pp);  // product of factors with p∤multiplicity
        int i = 1;
        while (mp_deg(w) > 0) {
            MP y = mp_gcd(w, g, pp);
            MP z = mp_divexact(w, y, pp);  // factors of multiplicity exactly i
            if (mp_deg(z) > 0) ddf_edf(z, mult * i, pp, factors, rng);
            w = y;
            if (mp_deg(g) > 0 && mp_deg(y) >= 0) g = mp_divexact(g, y, pp);
            ++i;
        }
        if (mp_deg(g) > 0) work.push_back({mp_pth_root(g, pp), mult * static_cast<int>(pp)});
    }

    std::vector<std::pair<IntPoly, int>> out;
    for (auto& [f, mult] : factors) {
        std::vector<Int> c;
        for (u64 v : f) c.emplace_back(v);
        out.emplace_back(IntPoly(std::move(c)), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree())
            return x.first.degree() < y.first.degree();
        return x.first.coeffs() < y.first.coeffs();
    });
    return out;
}

FiniteField::FiniteField(const Int& p, const IntPoly& modulus) {
    if (!is_probable_prime(p)) fail_input("finite field characteristic is not prime");
    if (!p.fits_ulong_p()) fail_input("finite field characteristic too large");
    p_ = p.get_ui();
    if (modulus.is_zero() || !modulus.is_monic())
        fail_input("finite field modulus must be monic");
    f_ = modulus.degree();
    if (f_ < 1) fail_input("finite field modulus must have degree >= 1");
    for (const auto& c : modulus.coeffs()) {
        Int r = c % Int(p_);
        if (r < 0) r += Int(p_);
        mod_.push_back(r.get_ui());
    }
    auto factors = factor_mod_p(modulus, p);
    if (factors.size() != 1 || factors[0].second != 1 ||
        factors[0].first.degree() != f_)
        fail_input("finite field modulus is not irreducible");
}

Int FiniteField::order() const { return int_pow(Int(p_), static_cast<unsigned long>(f_)); }

FiniteField::Elem FiniteField::one() const {
    Elem e = zero();
    e[0] = 1 % p_;
    return e;
}

FiniteField::Elem FiniteField::from_int(const Int& n) const {
    Int r = n % Int(p_);
    if (r < 0) r += Int(p_);
    Elem e = zero();
    e[0] = r.get_ui();
    return e;
}

FiniteField::Elem FiniteField::generator_image() const {
    MP x{0, 1};
    x = mp_mod(x, mod_, p_);
    Elem e = zero();
    for (size_t i = 0; i < x.size(); ++i) e[i] = x[i];
    return e;
}

bool FiniteField::is_zero(const Elem& a) const {
    for (u64 v : a)
        if (v) return false;
    return true;
}

FiniteField::Elem FiniteField::add(const Elem& a, const Elem& b) const {
    Elem c = zero();
    for (int i = 0; i < f_; ++i)
        c[static_cast<size_t>(i)] =
            addm(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)], p_);
    return c;
}

FiniteField::Elem FiniteField::sub(const Elem& a, const Elem& b) const {
    Elem c = zero();
    for (int i = 0; i < f_; ++i)
        c[static_cast<size_t>(i)] =
            subm(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)], p_);
    return c;
}

FiniteField::Elem FiniteField::neg(const Elem& a) const { return sub(zero(), a); }

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const {
    MP pa(a.begin(), a.end()), pb(b.begin(), b.end());
    mp_trim(pa);
    mp_trim(pb);
    MP c = mp_mod(mp_mul(pa, pb, p_), mod_, p_);
    Elem e = zero();
    for (size_t i = 0; i < c.size(); ++i) e[i] = c[i];
    return e;
}

FiniteField::Elem FiniteField::pow(const Elem& a, const Int& e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem r = one(), base = a;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

FiniteField::Elem FiniteField::inv(const Elem& a) const {
    if (is_zero(a)) fail_input("inversion of zero in a finite field");
    return pow(a, order() - 2);
}

std::uint64_t FiniteField::index_of(const Elem& a) const {
    u64 idx = 0;
    for (int i = f_; i-- > 0;) idx = idx * p_ + a[static_cast<size_t>(i)];
    return idx;
}

FiniteField::Elem FiniteField::elem_at(std::uint64_t idx) const {
    Elem e = zero();
    for (int i = 0; i < f_; ++i) {
        e[static_cast<size_t>(i)] = idx % p_;
        idx /= p_;
    }
    return e;
}

int FiniteField::chi(const Elem& a) const {
    if (is_zero(a)) return 0;
    if (p_ == 2) return 1;  // every element of a char-2 field is a square
    Elem t = pow(a, (order() - 1) / 2);
    return t == one() ? 1 : -1;
}

Int count_points_legendre(const FiniteField::Elem& s, const FiniteField::Elem& t,
                          const FiniteField& F) {
    FiniteField::Elem st = F.mul(s, t);
    FiniteField::Elem spt = F.add(s, t);
    if (F.is_zero(st) || F.is_zero(spt))
        fail_input("singular cubic: x(x-s)(x+t) has a repeated root");
    const Int q = F.order();
    if (q > 4000000) fail_input("point count: field too large for enumeration");
    Int sum = 0;
    const u64 n = q.get_ui();
    for (u64 i = 0; i < n; ++i) {
        auto x = F.elem_at(i);
        auto v = F.mul(F.mul(x, F.sub(x, s)), F.add(x, t));
        sum += F.chi(v);
    }
    return q + 1 + sum;
}

Int count_points_exhaustive(const FiniteField::Elem& s, const FiniteField::Elem& t,
                            const FiniteField& F) {
    const Int q = F.order();
    if (q > 100000) fail_input("exhaustive count: field too large");
    const u64 n = q.get_ui();
    Int count = 1;  // point at infinity
    for (u64 i = 0; i < n; ++i) {
        auto x = F.elem_at(i);
        auto v = F.mul(F.mul(x, F.sub(x, s)), F.add(x, t));
        for (u64 j = 0; j < n; ++j) {
            auto y = F.elem_at(j);
            if (F.mul(y, y) == v) count += 1;
        }
    }
    return count;
}

}  // namespace fk
