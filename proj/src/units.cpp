#include "fermatkit/units.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace fk {

IntPoly char_poly(const FieldElement& x) {
    const NumberField& K = *x.field;
    const int d = K.degree();
    auto M = K.mult_matrix(x);
    // Faddeev-LeVerrier over Q
    std::vector<Rat> coeffs(static_cast<size_t>(d) + 1, Rat(0));
    coeffs[static_cast<size_t>(d)] = 1;
    std::vector<std::vector<Rat>> Mk(static_cast<size_t>(d),
                                     std::vector<Rat>(static_cast<size_t>(d), Rat(0)));
    for (int i = 0; i < d; ++i) Mk[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    auto mat_mul = [&](const std::vector<std::vector<Rat>>& A,
                       const std::vector<std::vector<Rat>>& B) {
        std::vector<std::vector<Rat>> C(static_cast<size_t>(d),
                                        std::vector<Rat>(static_cast<size_t>(d), Rat(0)));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                if (A[static_cast<size_t>(i)][static_cast<size_t>(k)] == 0) continue;
                for (int j = 0; j < d; ++j)
                    C[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                        A[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                        B[static_cast<size_t>(k)][static_cast<size_t>(j)];
            }
        return C;
    };
    std::vector<std::vector<Rat>> Ak = Mk;
    for (int k = 1; k <= d; ++k) {
        Ak = mat_mul(M, Ak);
        Rat tr(0);
        for (int i = 0; i < d; ++i) tr += Ak[static_cast<size_t>(i)][static_cast<size_t>(i)];
        Rat ck = -tr / Rat(k);
        coeffs[static_cast<size_t>(d - k)] = ck;
        for (int i = 0; i < d; ++i) Ak[static_cast<size_t>(i)][static_cast<size_t>(i)] += ck;
    }
    RatPoly cp{std::vector<Rat>(coeffs)};
    return to_int_checked(cp);
}

UnitCertificate make_unit_certificate(const FieldElement& u) {
    const NumberField& K = *u.field;
    Rat n = K.norm(u);
    if (n != 1 && n != -1) fail_input("tower unit does not have norm +-1");
    if (!u.is_integral()) fail_input("tower unit is not integral");
    UnitCertificate c;
    c.u = u;
    c.H = char_poly(u);
    c.t = c.H.degree();
    c.totally_positive = K.totally_positive(u);
    if (!c.totally_positive)
        fail_input("tower unit is not totally positive");
    return c;
}

static IntPoly subst_y_to_x(const IntPoly& p) { return p; }

std::vector<Int> h_tower_exact(const UnitCertificate& u, int n_max) {
    BiPoly G = BiPoly::homogenize(u.H);
    std::vector<Int> vals;
    IntPoly cur = u.H;
    for (int n = 1; n <= n_max; ++n) {
        vals.push_back(cur.eval(Int(1)));
        if (n < n_max) cur = subst_y_to_x(resultant_in_x(cur, G));
    }
    return vals;
}

std::optional<Int> h_tower_interval_value(const UnitCertificate& u, int n) {
    // roots of H with multiplicity m = t / deg(squarefree part); the product
    // over distinct-root tuples is an integer P and H_n(1) = P^(m^n)
    IntPoly sf = squarefree_part(u.H);
    const int s = sf.degree();
    const int m = u.t / s;
    auto ivs = isolate_real_roots(sf);
    if (static_cast<int>(ivs.size()) != s)
        fail_internal("tower polynomial is not totally real");
    unsigned long tuples = 1;
    for (int i = 0; i < n; ++i) tuples *= static_cast<unsigned long>(s);
    for (long prec = 256; prec <= (1L << 21); prec *= 2) {
        for (auto& iv : ivs) iv = refine_root(sf, iv, prec);
        // width of the final product ~ tuples * 2^-prec * magnitude; try and
        // see, doubling on failure
        RealInterval prod = RealInterval::point(Rat(1));
        std::vector<size_t> idx(static_cast<size_t>(n), 0);
        bool overflowed = false;
        for (unsigned long count = 0; count < tuples; ++count) {
            RealInterval term = RealInterval::point(Rat(1));
            for (int j = 0; j < n; ++j) term = term * ivs[idx[static_cast<size_t>(j)]];
            prod = prod * (RealInterval::point(Rat(1)) - term);
            prod = prod.round_out(prec + 64);
            // odometer
            for (int j = 0; j < n; ++j) {
                if (++idx[static_cast<size_t>(j)] < static_cast<size_t>(s)) break;
                idx[static_cast<size_t>(j)] = 0;
            }
            if (prod.width() > Rat(Int(1) << 40) &&
                prod.sign() == 0) {  // hopeless at this precision
                overflowed = true;
                break;
            }
        }
        if (overflowed) continue;
        if (prod.width() < 1) {
            Int lo_ceil, hi_floor;
            mpz_cdiv_q(lo_ceil.get_mpz_t(), Int(prod.lo.get_num()).get_mpz_t(),
                       Int(prod.lo.get_den()).get_mpz_t());
            mpz_fdiv_q(hi_floor.get_mpz_t(), Int(prod.hi.get_num()).get_mpz_t(),
                       Int(prod.hi.get_den()).get_mpz_t());
            if (lo_ceil == hi_floor) {
                Int P = lo_ceil;
                unsigned long expo = 1;
                for (int i = 0; i < n; ++i) expo *= static_cast<unsigned long>(m);
                Int out;
                mpz_pow_ui(out.get_mpz_t(), P.get_mpz_t(), expo);
                return out;
            }
        }
    }
    return std::nullopt;
}

RkCertificate rk_multiple(const std::vector<UnitCertificate>& units, int d) {
    if (units.empty()) fail_input("rk_multiple: no units supplied");
    const int n_max = d / 2;
    RkCertificate cert;
    cert.units = units;
    cert.R_multiple = 1;

    // exact towers once per unit, as far as the degree budget allows
    std::vector<std::vector<Int>> exact_vals(units.size());
    for (size_t i = 0; i < units.size(); ++i) {
        int levels = 0;
        Int deg = 1;
        for (int n = 1; n <= n_max; ++n) {
            deg *= units[i].t;
            if (deg >= kTowerResultantDegreeLimit) break;
            levels = n;
        }
        if (levels > 0) exact_vals[i] = h_tower_exact(units[i], levels);
    }

    for (int n = 1; n <= n_max; ++n) {
        RkLevel level;
        level.n = n;
        level.degree = 1;
        for (int i = 0; i < n; ++i) level.degree *= units[0].t;
        Int g = 0;
        for (size_t i = 0; i < units.size(); ++i) {
            Int v;
            if (static_cast<size_t>(n) <= exact_vals[i].size()) {
                v = exact_vals[i][static_cast<size_t>(n - 1)];
                level.path.push_back("resultant");
            } else {
                auto iv = h_tower_interval_value(units[i], n);
                if (!iv)
                    fail_internal("tower interval value did not converge");
                v = *iv;
                level.path.push_back("interval");
            }
            level.values.push_back(v);
            g = int_gcd(g, v);
        }
        level.A_n = g;
        if (g == 0) {
            level.conclusive = false;
            cert.conclusive = false;
        } else {
            cert.R_multiple *= g;
        }
        cert.levels.push_back(std::move(level));
    }
    if (!cert.conclusive) cert.R_multiple = 0;
    return cert;
}

// ---------------------------------------------------------------------------
// sign map, narrow and ray class numbers
// ---------------------------------------------------------------------------

namespace {

int gf2_rank(std::vector<std::uint32_t> rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols; ++c) {
        size_t piv = static_cast<size_t>(rank);
        while (piv < rows.size() && !(rows[piv] & (1u << c))) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<size_t>(rank) && (rows[r] & (1u << c)))
                rows[r] ^= rows[static_cast<size_t>(rank)];
        ++rank;
    }
    return rank;
}

std::uint32_t sign_bits(const NumberField& K, const FieldElement& x) {
    auto signs = K.embedding_signs(x);
    std::uint32_t b = 0;
    for (size_t i = 0; i < signs.size(); ++i)
        if (signs[i] < 0) b |= 1u << i;
    return b;
}

}  // namespace

SignMapReport narrow_class_number(const NumberField& K) {
    if (!K.class_number())
        fail_data(K.label() + ": class number not supplied in the fixture");
    const int d = K.degree();
    std::vector<FieldElement> gens;
    gens.push_back(K.neg(K.one()));
    for (const auto& u : K.fundamental_units()) gens.push_back(u);
    SignMapReport rep;
    std::vector<std::uint32_t> rows;
    for (const auto& g : gens) {
        auto signs = K.embedding_signs(g);
        rep.sign_vectors.push_back(signs);
        std::uint32_t b = 0;
        for (size_t i = 0; i < signs.size(); ++i)
            if (signs[i] < 0) b |= 1u << i;
        rows.push_back(b);
    }
    rep.rank = gf2_rank(rows, d);
    // h+ = 2^d h / [U_K : U_K^+] with [U_K : U_K^+] = 2^rank
    rep.h_plus = (Int(1) << (d - rep.rank)) * *K.class_number();
    return rep;
}

std::string RayClassModulus::describe() const {
    switch (kind) {
        case Kind::trivial: return "(1)";
        case Kind::mod4: return "4O_K";
        case Kind::prime:
            return "prime over " + prime->p.get_str() + " (e=" +
                   std::to_string(prime->e) + ", f=" + std::to_string(prime->f) + ")";
    }
    return "?";
}

RayClassReport ray_class_number(const NumberField& K, const RayClassModulus& m,
                                bool include_all_infinite) {
    if (!K.class_number())
        fail_data(K.label() + ": class number not supplied in the fixture");
    if (*K.class_number() != 1)
        fail_input(K.label() + ": ray class computation supports only h_K = 1");
    const int d = K.degree();

    // residue component: an element key plus multiplication
    Int res_order(1);
    std::function<std::uint64_t(const FieldElement&)> res_key;
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> res_mul;
    std::uint64_t res_one = 0;

    const QuotientRingMod4* G4 = nullptr;
    std::shared_ptr<const FiniteField> F;
    switch (m.kind) {
        case RayClassModulus::Kind::trivial:
            res_key = [](const FieldElement&) { return std::uint64_t(0); };
            res_mul = [](std::uint64_t, std::uint64_t) { return std::uint64_t(0); };
            break;
        case RayClassModulus::Kind::mod4: {
            G4 = &K.quotient_mod4();
            res_order = Int(static_cast<unsigned long>(G4->unit_count()));
            res_one = G4->one();
            res_key = [G4](const FieldElement& x) {
                return static_cast<std::uint64_t>(G4->pack(x));
            };
            res_mul = [G4](std::uint64_t a, std::uint64_t b) {
                return static_cast<std::uint64_t>(
                    G4->mul(static_cast<QuotientRingMod4::Packed>(a),
                            static_cast<QuotientRingMod4::Packed>(b)));
            };
            break;
        }
        case RayClassModulus::Kind::prime: {
            if (!m.prime || !m.prime->residue_field)
                fail_data("ray class modulus prime has no residue field data");
            F = m.prime->residue_field;
            res_order = F->order() - 1;
            res_one = F->index_of(F->one());
            const PrimeIdealData* q = &*m.prime;
            const NumberField* Kp = &K;
            res_key = [F, q, Kp](const FieldElement& x) {
                auto r = Kp->reduce_mod_prime(x, *q);
                if (F->is_zero(r)) fail_input("unit reduces to zero mod the modulus");
                return F->index_of(r);
            };
            res_mul = [F](std::uint64_t a, std::uint64_t b) {
                return F->index_of(F->mul(F->elem_at(a), F->elem_at(b)));
            };
            break;
        }
    }

    Int group_order = res_order;
    if (include_all_infinite) group_order <<= d;

    // generators: torsion (-1) and the fundamental units
    std::vector<FieldElement> gens;
    gens.push_back(K.neg(K.one()));
    for (const auto& u : K.fundamental_units()) gens.push_back(u);

    auto full_key = [&](const FieldElement& x) -> std::uint64_t {
        std::uint64_t rk = res_key(x);
        std::uint64_t sk = include_all_infinite ? sign_bits(K, x) : 0;
        return (rk << d) | sk;
    };
    auto full_mul = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        std::uint64_t ra = a >> d, rb = b >> d;
        std::uint64_t sa = a & ((1u << d) - 1), sb = b & ((1u << d) - 1);
        return (res_mul(ra, rb) << d) | (sa ^ sb);
    };

    std::uint64_t ident = (static_cast<std::uint64_t>(res_one) << d);
    std::map<std::uint64_t, bool> seen;
    std::deque<std::uint64_t> work;
    seen[ident] = true;
    work.push_back(ident);
    std::vector<std::uint64_t> gen_keys;
    for (const auto& g : gens) gen_keys.push_back(full_key(g));
    while (!work.empty()) {
        auto cur = work.front();
        work.pop_front();
        for (auto g : gen_keys) {
            auto nxt = full_mul(cur, g);
            if (!seen.count(nxt)) {
                seen[nxt] = true;
                work.push_back(nxt);
            }
        }
    }

    RayClassReport rep;
    rep.modulus = m.describe();
    rep.all_infinite_places = include_all_infinite;
    rep.group_order = group_order;
    rep.image_order = Int(static_cast<unsigned long>(seen.size()));
    Int num = group_order * *K.class_number();
    if (!mpz_divisible_p(num.get_mpz_t(), rep.image_order.get_mpz_t()))
        fail_internal("unit image order does not divide the ray group order");
    rep.ray_class_number = num / rep.image_order;
    return rep;
}

Theorem17Verdict theorem17_check(const NumberField& K) {
    Theorem17Verdict v;
    v.two_totally_ramified = K.two_totally_ramified();
    auto narrow = narrow_class_number(K);
    v.h_plus = narrow.h_plus;
    v.h_plus_is_one = (narrow.h_plus == 1);
    v.h_K_is_one = (*K.class_number() == 1);

    const auto& G = K.quotient_mod4();
    std::vector<QuotientRingMod4::Packed> gens;
    gens.push_back(G.pack(K.neg(K.one())));
    for (const auto& u : K.fundamental_units()) gens.push_back(G.pack(u));
    auto image = G.closure(gens);
    v.units_surject_mod4 = image.size() == G.unit_count();

    auto sq = G.squares();
    std::vector<QuotientRingMod4::Packed> spanned_gens = gens;
    spanned_gens.insert(spanned_gens.end(), sq.begin(), sq.end());
    v.units_span_mod4_squares = G.closure(spanned_gens).size() == G.unit_count();

    v.K_equals_ray_class_field_mod4 = v.h_K_is_one && v.units_surject_mod4;
    v.corollary_consistent =
        !v.two_totally_ramified ||
        (v.h_plus_is_one == v.K_equals_ray_class_field_mod4);
    return v;
}

namespace {

// breadth-first search in the unit image inside (O_K/4)^*, tracking words so
// the witness can be reconstructed exactly
FieldElement bfs_unit_with(const NumberField& K,
                           const std::function<bool(QuotientRingMod4::Packed)>& want) {
    const auto& G = K.quotient_mod4();
    std::vector<FieldElement> gens;
    gens.push_back(K.neg(K.one()));
    for (const auto& u : K.fundamental_units()) gens.push_back(u);
    std::vector<QuotientRingMod4::Packed> gen_cls;
    for (const auto& g : gens) gen_cls.push_back(G.pack(g));

    std::map<QuotientRingMod4::Packed, std::pair<QuotientRingMod4::Packed, size_t>> parent;
    std::deque<QuotientRingMod4::Packed> work;
    auto start = G.one();
    parent[start] = {start, SIZE_MAX};
    if (want(start)) return K.one();
    work.push_back(start);
    while (!work.empty()) {
        auto cur = work.front();
        work.pop_front();
        for (size_t gi = 0; gi < gen_cls.size(); ++gi) {
            auto nxt = G.mul(cur, gen_cls[gi]);
            if (parent.count(nxt)) continue;
            parent[nxt] = {cur, gi};
            if (want(nxt)) {
                // reconstruct the exact unit from the word
                FieldElement eps = K.one();
                auto node = nxt;
                while (node != start) {
                    auto [prev, gidx] = parent[node];
                    eps = K.mul(eps, gens[gidx]);
                    node = prev;
                }
                return eps;
            }
            work.push_back(nxt);
        }
    }
    fail_internal(K.label() +
                  ": no unit with the requested mod-4 class (unit image is not "
                  "surjective)");
}

}  // namespace

FieldElement find_normalizing_unit(const NumberField& K, const FieldElement& a) {
    auto t17 = theorem17_check(K);
    if (!t17.K_equals_ray_class_field_mod4)
        fail_input(K.label() + ": K = K^{4O_K} does not hold; cannot normalize");
    if (!a.is_integral()) fail_input("normalization input must be integral");
    if (valuation(K.norm(a), Int(2)) != 0)
        fail_input("normalization input must be coprime to 2");
    const auto& G = K.quotient_mod4();
    auto target = G.inv(G.pack(K.neg(a)));  // eps = (-a)^{-1} in (O_K/4)^*
    FieldElement eps =
        bfs_unit_with(K, [&](QuotientRingMod4::Packed p) { return p == target; });
    // eps^{-1} = -a mod 4  <=>  eps * (-a) = 1 mod 4
    auto check = G.mul(G.pack(eps), G.pack(K.neg(a)));
    if (check != G.one()) fail_internal("normalizing unit verification failed");
    return eps;
}

FieldElement find_power_normalizing_unit(const NumberField& K, const FieldElement& a,
                                         const Int& p) {
    auto t17 = theorem17_check(K);
    if (!t17.K_equals_ray_class_field_mod4)
        fail_input(K.label() + ": K = K^{4O_K} does not hold; cannot normalize");
    if (mpz_even_p(p.get_mpz_t())) fail_input("power normalization needs odd p");
    const auto& G = K.quotient_mod4();
    auto a_cls = G.pack(a);
    auto minus_one = G.pack(K.neg(K.one()));
    FieldElement eps = bfs_unit_with(K, [&](QuotientRingMod4::Packed c) {
        return G.mul(G.pow(c, p), a_cls) == minus_one;
    });
    return eps;
}

}  // namespace fk
