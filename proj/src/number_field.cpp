#include "fermatkit/number_field.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace fk {

namespace {

// solve M x = rhs over Q; M is square and must be invertible
std::vector<Rat> solve(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs) {
    const size_t n = M.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && M[piv][c] == 0) ++piv;
        if (piv == n) fail_input("singular matrix");
        std::swap(M[c], M[piv]);
        std::swap(rhs[c], rhs[piv]);
        Rat pv = M[c][c];
        for (size_t j = c; j < n; ++j) M[c][j] /= pv;
        rhs[c] /= pv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c] == 0) continue;
            Rat f = M[r][c];
            for (size_t j = c; j < n; ++j) M[r][j] -= f * M[c][j];
            rhs[r] -= f * rhs[c];
        }
    }
    return rhs;
}

Rat det(std::vector<std::vector<Rat>> M) {
    const size_t n = M.size();
    Rat d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && M[piv][c] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(M[c], M[piv]);
            d = -d;
        }
        d *= M[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (M[r][c] == 0) continue;
            Rat f = M[r][c] / M[c][c];
            for (size_t j = c; j < n; ++j) M[r][j] -= f * M[c][j];
        }
    }
    return d;
}

std::vector<std::vector<Rat>> invert(const std::vector<std::vector<Rat>>& M) {
    const size_t n = M.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t c = 0; c < n; ++c) {
        std::vector<Rat> e(n, Rat(0));
        e[c] = 1;
        auto col = solve(M, e);
        for (size_t r = 0; r < n; ++r) inv[r][c] = col[r];
    }
    return inv;
}

}  // namespace

bool FieldElement::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_integral() const {
    for (const auto& c : coords)
        if (!is_integer(c)) return false;
    return true;
}

NumberField::NumberField(NumberFieldData data) : data_(std::move(data)) {
    d_ = data_.min_poly.degree();
    validate();
    for (const auto& u : data_.fundamental_units) units_.push_back(element(u));
    for (const auto& u : data_.rk_units) rk_units_.push_back(element(u));
}

void NumberField::validate() {
    const IntPoly& f = data_.min_poly;
    if (d_ < 1) fail_input(data_.label + ": defining polynomial must be nonconstant");
    if (!f.is_monic()) fail_input(data_.label + ": defining polynomial must be monic");
    if (squarefree_part(f).degree() != d_)
        fail_input(data_.label + ": defining polynomial is not squarefree");
    if (count_real_roots(f) != d_)
        fail_input(data_.label + ": defining polynomial is not totally real");
    if (data_.integral_basis.size() != static_cast<size_t>(d_))
        fail_input(data_.label + ": integral basis must have d rows");
    for (const auto& row : data_.integral_basis)
        if (row.size() != static_cast<size_t>(d_))
            fail_input(data_.label + ": integral basis must be square");

    basis_inv_ = invert(data_.integral_basis);

    // structure constants: products of basis elements must have integer
    // coordinates (the basis spans an order)
    auto mul_power = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> conv(2 * static_cast<size_t>(d_) - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) conv[i + j] += a[i] * b[j];
        // reduce powers alpha^k, k >= d
        for (size_t k = conv.size(); k-- > static_cast<size_t>(d_);) {
            Rat lead = conv[k];
            if (lead == 0) continue;
            conv[k] = 0;
            for (int i = 0; i < d_; ++i)
                conv[k - static_cast<size_t>(d_) + static_cast<size_t>(i)] -=
                    lead * Rat(f[static_cast<size_t>(i)]);
        }
        conv.resize(static_cast<size_t>(d_));
        return conv;
    };
    struct_.assign(static_cast<size_t>(d_),
                   std::vector<std::vector<Int>>(static_cast<size_t>(d_)));
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) {
            auto prod = mul_power(data_.integral_basis[static_cast<size_t>(i)],
                                  data_.integral_basis[static_cast<size_t>(j)]);
            std::vector<Rat> coords(static_cast<size_t>(d_), Rat(0));
            for (int k = 0; k < d_; ++k)
                for (int l = 0; l < d_; ++l)
                    coords[static_cast<size_t>(l)] +=
                        prod[static_cast<size_t>(k)] *
                        basis_inv_[static_cast<size_t>(k)][static_cast<size_t>(l)];
            std::vector<Int> ic;
            for (auto& c : coords) {
                if (!is_integer(c))
                    fail_input(data_.label + ": basis does not span an order");
                ic.emplace_back(c.get_num());
            }
            struct_[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(ic);
        }

    {
        std::vector<Rat> one_power(static_cast<size_t>(d_), Rat(0));
        one_power[0] = 1;
        one_coords_.assign(static_cast<size_t>(d_), Rat(0));
        for (int k = 0; k < d_; ++k)
            for (int l = 0; l < d_; ++l)
                one_coords_[static_cast<size_t>(l)] +=
                    one_power[static_cast<size_t>(k)] *
                    basis_inv_[static_cast<size_t>(k)][static_cast<size_t>(l)];
        for (const auto& c : one_coords_)
            if (!is_integer(c))
                fail_input(data_.label + ": 1 is not in the lattice spanned by the basis");
    }

    // trace-form discriminant must equal the claimed one
    {
        std::vector<std::vector<Rat>> T(static_cast<size_t>(d_),
                                        std::vector<Rat>(static_cast<size_t>(d_)));
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) {
                FieldElement e;
                e.field = this;
                e.coords.assign(static_cast<size_t>(d_), Rat(0));
                for (int k = 0; k < d_; ++k)
                    e.coords[static_cast<size_t>(k)] =
                        Rat(struct_[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                   [static_cast<size_t>(k)]);
                T[static_cast<size_t>(i)][static_cast<size_t>(j)] = trace(e);
            }
        Rat dd = det(T);
        if (dd != Rat(data_.disc))
            fail_input(data_.label + ": basis discriminant " + rat_to_string(dd) +
                       " does not match claimed " + data_.disc.get_str());
    }

    // index of the power basis
    {
        Int df = discriminant(f);
        Int ratio;
        mpz_divexact(ratio.get_mpz_t(), df.get_mpz_t(), data_.disc.get_mpz_t());
        index_ = int_sqrt_exact(ratio);
    }

    // a single irreducible factorization mod p certifies irreducibility over Q
    for (Int p = 2; p < 300 && !irreducible_certified_;
         mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        auto facs = factor_mod_p(f, p);
        if (facs.size() == 1 && facs[0].second == 1 && facs[0].first.degree() == d_)
            irreducible_certified_ = true;
    }

    for (const auto& u : data_.fundamental_units) {
        FieldElement e;
        e.field = this;
        e.coords = u;
        Rat n = norm(e);
        if (n != 1 && n != -1)
            fail_input(data_.label + ": supplied unit has norm " + rat_to_string(n));
    }
    for (size_t i = 0; i < data_.fundamental_units.size(); ++i)
        for (size_t j = i + 1; j < data_.fundamental_units.size(); ++j)
            if (data_.fundamental_units[i] == data_.fundamental_units[j])
                fail_input(data_.label + ": duplicate fundamental unit");
}

FieldElement NumberField::element(std::vector<Rat> basis_coords) const {
    if (basis_coords.size() != static_cast<size_t>(d_))
        fail_input("element coordinate vector has wrong length");
    FieldElement e;
    e.field = this;
    e.coords = std::move(basis_coords);
    for (auto& c : e.coords) c.canonicalize();
    return e;
}

FieldElement NumberField::from_power_coords(const std::vector<Rat>& pc) const {
    if (pc.size() > static_cast<size_t>(d_))
        fail_input("power coordinate vector too long");
    std::vector<Rat> coords(static_cast<size_t>(d_), Rat(0));
    for (size_t k = 0; k < pc.size(); ++k)
        for (int l = 0; l < d_; ++l)
            coords[static_cast<size_t>(l)] += pc[k] * basis_inv_[k][static_cast<size_t>(l)];
    return element(std::move(coords));
}

FieldElement NumberField::from_rational(const Rat& r) const {
    std::vector<Rat> pc(static_cast<size_t>(d_), Rat(0));
    pc[0] = r;
    return from_power_coords(pc);
}

FieldElement NumberField::zero() const {
    return element(std::vector<Rat>(static_cast<size_t>(d_), Rat(0)));
}
FieldElement NumberField::one() const { return from_rational(Rat(1)); }

FieldElement NumberField::alpha() const {
    std::vector<Rat> pc(static_cast<size_t>(d_), Rat(0));
    if (d_ == 1)
        pc[0] = Rat(-data_.min_poly[0]);
    else
        pc[1] = 1;
    return from_power_coords(pc);
}

std::vector<Rat> NumberField::power_coords(const FieldElement& x) const {
    std::vector<Rat> pc(static_cast<size_t>(d_), Rat(0));
    for (int i = 0; i < d_; ++i)
        for (int k = 0; k < d_; ++k)
            pc[static_cast<size_t>(k)] +=
                x.coords[static_cast<size_t>(i)] *
                data_.integral_basis[static_cast<size_t>(i)][static_cast<size_t>(k)];
    return pc;
}

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
    std::vector<Rat> c(static_cast<size_t>(d_));
    for (int i = 0; i < d_; ++i)
        c[static_cast<size_t>(i)] =
            a.coords[static_cast<size_t>(i)] + b.coords[static_cast<size_t>(i)];
    return element(std::move(c));
}

FieldElement NumberField::sub(const FieldElement& a, const FieldElement& b) const {
    std::vector<Rat> c(static_cast<size_t>(d_));
    for (int i = 0; i < d_; ++i)
        c[static_cast<size_t>(i)] =
            a.coords[static_cast<size_t>(i)] - b.coords[static_cast<size_t>(i)];
    return element(std::move(c));
}

FieldElement NumberField::neg(const FieldElement& a) const {
    std::vector<Rat> c(static_cast<size_t>(d_));
    for (int i = 0; i < d_; ++i) c[static_cast<size_t>(i)] = -a.coords[static_cast<size_t>(i)];
    return element(std::move(c));
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
    std::vector<Rat> c(static_cast<size_t>(d_), Rat(0));
    for (int i = 0; i < d_; ++i) {
        if (a.coords[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < d_; ++j) {
            if (b.coords[static_cast<size_t>(j)] == 0) continue;
            Rat f = a.coords[static_cast<size_t>(i)] * b.coords[static_cast<size_t>(j)];
            const auto& sc = struct_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (int k = 0; k < d_; ++k)
                if (sc[static_cast<size_t>(k)] != 0)
                    c[static_cast<size_t>(k)] += f * Rat(sc[static_cast<size_t>(k)]);
        }
    }
    return element(std::move(c));
}

std::vector<std::vector<Rat>> NumberField::mult_matrix(const FieldElement& a) const {
    std::vector<std::vector<Rat>> M(static_cast<size_t>(d_),
                                    std::vector<Rat>(static_cast<size_t>(d_), Rat(0)));
    for (int j = 0; j < d_; ++j) {
        // a * w_j
        for (int i = 0; i < d_; ++i) {
            if (a.coords[static_cast<size_t>(i)] == 0) continue;
            const auto& sc = struct_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (int k = 0; k < d_; ++k)
                if (sc[static_cast<size_t>(k)] != 0)
                    M[static_cast<size_t>(k)][static_cast<size_t>(j)] +=
                        a.coords[static_cast<size_t>(i)] * Rat(sc[static_cast<size_t>(k)]);
        }
    }
    return M;
}

FieldElement NumberField::inverse(const FieldElement& a) const {
    if (a.is_zero()) fail_input("inversion of zero");
    return element(solve(mult_matrix(a), one_coords_));
}

FieldElement NumberField::pow(const FieldElement& a, const Int& e) const {
    if (e < 0) return pow(inverse(a), -e);
    FieldElement r = one(), base = a;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

Rat NumberField::norm(const FieldElement& a) const { return det(mult_matrix(a)); }

Rat NumberField::trace(const FieldElement& a) const {
    auto M = mult_matrix(a);
    Rat t(0);
    for (int i = 0; i < d_; ++i) t += M[static_cast<size_t>(i)][static_cast<size_t>(i)];
    return t;
}

std::vector<RealInterval> NumberField::embeddings(const FieldElement& x,
                                                  long prec_bits) const {
    if (roots_.empty()) {
        roots_ = isolate_real_roots(data_.min_poly);
        root_prec_ = 4;
    }
    if (root_prec_ < prec_bits) {
        for (auto& r : roots_) r = refine_root(data_.min_poly, r, prec_bits);
        root_prec_ = prec_bits;
    }
    auto pc = power_coords(x);
    std::vector<RealInterval> out;
    out.reserve(roots_.size());
    for (const auto& r : roots_) out.push_back(eval_on_interval(pc, r));
    return out;
}

std::vector<int> NumberField::embedding_signs(const FieldElement& x) const {
    if (x.is_zero()) return std::vector<int>(static_cast<size_t>(d_), 0);
    for (long prec = 32; prec <= (1L << 16); prec *= 2) {
        auto em = embeddings(x, prec);
        std::vector<int> signs;
        bool ok = true;
        for (const auto& iv : em) {
            int s = iv.sign();
            if (s == 0) {
                ok = false;
                break;
            }
            signs.push_back(s);
        }
        if (ok) return signs;
    }
    fail_internal("embedding sign of a nonzero element did not resolve");
}

bool NumberField::totally_positive(const FieldElement& x) const {
    auto s = embedding_signs(x);
    return std::all_of(s.begin(), s.end(), [](int v) { return v > 0; });
}

std::vector<PrimeIdealData> NumberField::dedekind_factor(const Int& p) const {
    if (!is_probable_prime(p)) fail_input("dedekind_factor: " + p.get_str() + " is not prime");
    auto ov = data_.prime_overrides.find(p);
    if (ov != data_.prime_overrides.end()) {
        std::vector<PrimeIdealData> out;
        int sum = 0;
        for (auto [e, f] : ov->second) {
            PrimeIdealData q;
            q.p = p;
            q.e = e;
            q.f = f;
            q.norm = int_pow(p, static_cast<unsigned long>(f));
            q.external = true;
            sum += e * f;
            out.push_back(std::move(q));
        }
        if (sum != d_) fail_input(data_.label + ": prime override violates sum(e*f) = d");
        return out;
    }
    if (mpz_divisible_p(index_.get_mpz_t(), p.get_mpz_t()))
        fail_input(data_.label + ": index obstruction at " + p.get_str() +
                   " (p divides [O_K : Z[alpha]]); supply the factorization "
                   "externally in the field descriptor");
    auto facs = factor_mod_p(data_.min_poly, p);
    std::vector<PrimeIdealData> out;
    int sum = 0;
    for (const auto& [g, e] : facs) {
        PrimeIdealData q;
        q.p = p;
        q.e = e;
        q.f = g.degree();
        q.gen_poly = g;
        q.residue_field = std::make_shared<FiniteField>(p, g);
        q.norm = int_pow(p, static_cast<unsigned long>(q.f));
        sum += q.e * q.f;
        out.push_back(std::move(q));
    }
    if (sum != d_) fail_internal(data_.label + ": sum(e*f) != d in Dedekind factorization");
    return out;
}

bool NumberField::two_totally_ramified() const {
    auto qs = dedekind_factor(Int(2));
    return qs.size() == 1 && qs[0].e == d_ && qs[0].f == 1;
}

long NumberField::v_L(const FieldElement& x) const {
    if (x.is_zero()) fail_input("v_L of zero");
    if (!two_totally_ramified())
        fail_input(data_.label + ": v_L requires 2 to be totally ramified");
    return valuation(norm(x), Int(2));
}

FiniteField::Elem NumberField::reduce_mod_prime(const FieldElement& x,
                                                const PrimeIdealData& q) const {
    if (!q.gen_poly || !q.residue_field)
        fail_data(data_.label + ": no generator polynomial for this prime (external data)");
    const FiniteField& F = *q.residue_field;
    auto pc = power_coords(x);
    for (const auto& c : pc)
        if (mpz_divisible_p(Int(c.get_den()).get_mpz_t(), q.p.get_mpz_t()))
            fail_input("element is not integral at the prime");
    FiniteField::Elem abar = F.generator_image();
    FiniteField::Elem acc = F.zero();
    for (size_t k = pc.size(); k-- > 0;) {
        acc = F.mul(acc, abar);
        Int num = pc[k].get_num(), den = pc[k].get_den();
        auto term = F.mul(F.from_int(num), F.inv(F.from_int(den)));
        acc = F.add(acc, term);
    }
    return acc;
}

const QuotientRingMod4& NumberField::quotient_mod4() const {
    if (!mod4_) {
        if (d_ > 8) fail_input(data_.label + ": mod-4 quotient limited to degree <= 8");
        mod4_ = std::make_unique<QuotientRingMod4>(*this);
    }
    return *mod4_;
}

// ---------------------------------------------------------------------------
// O_K / 4O_K
// ---------------------------------------------------------------------------

QuotientRingMod4::QuotientRingMod4(const NumberField& K) : K_(&K), d_(K.degree()) {
    mul_table_.assign(static_cast<size_t>(d_) * static_cast<size_t>(d_), {});
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) {
            auto& slot = mul_table_[static_cast<size_t>(i * d_ + j)];
            for (int k = 0; k < d_; ++k) {
                Int c = K.struct_[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                 [static_cast<size_t>(k)] %
                        4;
                if (c < 0) c += 4;
                slot[static_cast<size_t>(k)] = c.get_si();
            }
        }
    {
        FieldElement one = K.one();
        one_ = pack(one);
    }
    const std::uint32_t total = 1u << (2 * d_);
    for (std::uint32_t v = 0; v < total; ++v)
        if (is_unit(v)) units_.push_back(v);
}

QuotientRingMod4::Packed QuotientRingMod4::pack(const FieldElement& x) const {
    if (!x.is_integral()) fail_input("mod-4 class of a non-integral element");
    Packed v = 0;
    for (int i = 0; i < d_; ++i) {
        Int c = Int(x.coords[static_cast<size_t>(i)].get_num()) % 4;
        if (c < 0) c += 4;
        v |= static_cast<Packed>(c.get_ui()) << (2 * i);
    }
    return v;
}

QuotientRingMod4::Packed QuotientRingMod4::mul(Packed a, Packed b) const {
    std::array<long, 8> out{};
    for (int i = 0; i < d_; ++i) {
        long ai = (a >> (2 * i)) & 3;
        if (!ai) continue;
        for (int j = 0; j < d_; ++j) {
            long bj = (b >> (2 * j)) & 3;
            if (!bj) continue;
            const auto& sc = mul_table_[static_cast<size_t>(i * d_ + j)];
            for (int k = 0; k < d_; ++k) out[static_cast<size_t>(k)] += ai * bj * sc[static_cast<size_t>(k)];
        }
    }
    Packed v = 0;
    for (int k = 0; k < d_; ++k)
        v |= static_cast<Packed>(out[static_cast<size_t>(k)] & 3) << (2 * k);
    return v;
}

bool QuotientRingMod4::is_unit(Packed a) const {
    // invertible mod 4 iff invertible mod 2 iff det of multiplication mod 2 is 1
    std::array<std::uint16_t, 8> rows{};
    for (int j = 0; j < d_; ++j) {
        // column j: a * e_j
        std::array<long, 8> col{};
        for (int i = 0; i < d_; ++i) {
            long ai = (a >> (2 * i)) & 3;
            if (!ai) continue;
            const auto& sc = mul_table_[static_cast<size_t>(i * d_ + j)];
            for (int k = 0; k < d_; ++k) col[static_cast<size_t>(k)] += ai * sc[static_cast<size_t>(k)];
        }
        for (int k = 0; k < d_; ++k)
            if (col[static_cast<size_t>(k)] & 1) rows[static_cast<size_t>(k)] |= 1u << j;
    }
    // GF(2) rank
    int rank = 0;
    for (int c = 0; c < d_; ++c) {
        int piv = -1;
        for (int r = rank; r < d_; ++r)
            if (rows[static_cast<size_t>(r)] & (1u << c)) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
        for (int r = 0; r < d_; ++r)
            if (r != rank && (rows[static_cast<size_t>(r)] & (1u << c)))
                rows[static_cast<size_t>(r)] ^= rows[static_cast<size_t>(rank)];
        ++rank;
    }
    return rank == d_;
}

QuotientRingMod4::Packed QuotientRingMod4::pow(Packed a, Int e) const {
    Packed r = one_, base = a;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

QuotientRingMod4::Packed QuotientRingMod4::inv(Packed a) const {
    if (!is_unit(a)) fail_input("mod-4 inverse of a non-unit");
    return pow(a, Int(static_cast<unsigned long>(units_.size())) - 1);
}

std::vector<QuotientRingMod4::Packed> QuotientRingMod4::squares() const {
    std::vector<char> seen(1u << (2 * d_), 0);
    std::vector<Packed> out;
    for (Packed u : units_) {
        Packed s = mul(u, u);
        if (!seen[s]) {
            seen[s] = 1;
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int QuotientRingMod4::square_index() const {
    return Int(static_cast<unsigned long>(units_.size())) /
           Int(static_cast<unsigned long>(squares().size()));
}

std::vector<QuotientRingMod4::Packed> QuotientRingMod4::closure(
    const std::vector<Packed>& gens) const {
    std::vector<char> seen(1u << (2 * d_), 0);
    std::deque<Packed> work;
    std::vector<Packed> out;
    seen[one_] = 1;
    work.push_back(one_);
    out.push_back(one_);
    while (!work.empty()) {
        Packed cur = work.front();
        work.pop_front();
        for (Packed g : gens) {
            Packed nxt = mul(cur, g);
            if (!seen[nxt]) {
                seen[nxt] = 1;
                work.push_back(nxt);
                out.push_back(nxt);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fk
