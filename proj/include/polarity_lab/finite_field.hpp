#ifndef POLARITY_LAB_FINITE_FIELD_HPP
#define POLARITY_LAB_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "polarity_lab/support.hpp"

namespace plab {

namespace detail {

// Polynomials over GF(p) used only while constructing a field: coefficient
// vectors low degree first, trailing zeros trimmed.
using PPoly = std::vector<uint32_t>;

inline void ppoly_trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PPoly ppoly_mulmod(const PPoly& a, const PPoly& b, const PPoly& mod, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<uint64_t>(a[i]) * b[j];
    // reduce by the monic modulus
    size_t m = mod.size() - 1;
    for (size_t i = acc.size(); i-- > m;) {
        uint64_t c = acc[i] % p;
        if (c == 0) continue;
        for (size_t j = 0; j < m; ++j) acc[i - m + j] += c * (p - mod[j]);
        acc[i] = 0;
    }
    PPoly r(m);
    for (size_t i = 0; i < m && i < acc.size(); ++i) r[i] = static_cast<uint32_t>(acc[i] % p);
    ppoly_trim(r);
    return r;
}

inline PPoly ppoly_powmod(PPoly base, uint64_t e, const PPoly& mod, uint32_t p) {
    PPoly r{1};
    while (e) {
        if (e & 1) r = ppoly_mulmod(r, base, mod, p);
        base = ppoly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

inline PPoly ppoly_gcd(PPoly a, PPoly b, uint32_t p) {
    auto inv_mod_p = [p](uint32_t x) {
        uint32_t r = 1;
        for (uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1) r = static_cast<uint32_t>((static_cast<uint64_t>(r) * x) % p);
            x = static_cast<uint32_t>((static_cast<uint64_t>(x) * x) % p);
        }
        return r;
    };
    ppoly_trim(a);
    ppoly_trim(b);
    while (!b.empty()) {
        // a mod b
        uint32_t lead_inv = inv_mod_p(b.back());
        while (a.size() >= b.size()) {
            uint64_t c = (static_cast<uint64_t>(a.back()) * lead_inv) % p;
            if (c != 0) {
                size_t off = a.size() - b.size();
                for (size_t j = 0; j < b.size(); ++j)
                    a[off + j] = static_cast<uint32_t>((a[off + j] + c * (p - b[j])) % p);
            }
            a.pop_back();
            ppoly_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// deg-n monic g irreducible over GF(p) iff X^{p^n} = X (mod g) and
// gcd(X^{p^{n/l}} - X, g) = 1 for every prime l | n
inline bool ppoly_irreducible(const PPoly& g, uint32_t p) {
    size_t n = g.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    PPoly x{0, 1};
    auto x_pow_pk = [&](uint64_t k) {
        PPoly r = x;
        for (uint64_t i = 0; i < k; ++i) r = ppoly_powmod(r, p, g, p);
        return r;
    };
    PPoly xpn = x_pow_pk(n);
    PPoly diff = xpn;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    ppoly_trim(diff);
    if (!diff.empty()) return false;
    for (uint64_t l : prime_factors(n)) {
        PPoly xk = x_pow_pk(n / l);
        PPoly d = xk;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        ppoly_trim(d);
        PPoly gg = ppoly_gcd(d, g, p);
        if (gg.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

/// Exact arithmetic context for GF(p^n).  Elements are canonical integer
/// encodings in [0, q): the base-p value of the coefficient vector in the
/// polynomial basis.  Immutable after build; every operation is pure.
class FieldCtx {
  public:
    static constexpr uint64_t kDefaultCeiling = 1ULL << 20;
    static constexpr uint64_t kHardCeiling = 1ULL << 24;
    static constexpr uint32_t kAddTableMax = 2048;

    /// Builds GF(p^n) with the deterministic modulus (smallest monic
    /// irreducible of degree n in encoding order) and the smallest generator.
    static std::shared_ptr<const FieldCtx> build(uint32_t p, uint32_t n);

    uint32_t p() const { return p_; }
    uint32_t n() const { return n_; }
    uint32_t q() const { return q_; }
    uint32_t generator() const { return gen_; }
    /// modulus coefficients c0..cn (monic, cn = 1)
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    // --- element arithmetic on canonical encodings -------------------------

    uint32_t add(uint32_t a, uint32_t b) const {
        if (!add_table_.empty()) return add_table_[static_cast<size_t>(a) * q_ + b];
        return add_digitwise(a, b);
    }

    uint32_t neg(uint32_t a) const { return neg_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg_[b]); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::invalid_argument("field: inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }

    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    /// a^e with e possibly negative; 0^0 = 1
    uint32_t pow(uint32_t a, int64_t e) const {
        if (a == 0) {
            if (e < 0) throw std::invalid_argument("field: inverse of zero");
            return e == 0 ? 1u : 0u;
        }
        int64_t m = q_ - 1;
        int64_t k = (static_cast<int64_t>(log_[a]) * (e % m)) % m;
        if (k < 0) k += m;
        return exp_[k];
    }

    /// discrete log base the canonical generator; a must be nonzero
    uint32_t dlog(uint32_t a) const {
        if (a == 0) throw std::invalid_argument("field: log of zero");
        return log_[a];
    }

    uint32_t theta_pow(uint64_t k) const { return exp_[k % (q_ - 1)]; }

    /// x^(p^k) for 0 <= k < n
    uint32_t frob(uint32_t a, uint32_t k) const {
        if (k >= n_) throw std::invalid_argument("field: frobenius exponent index out of range");
        return frob_[static_cast<size_t>(k) * q_ + a];
    }

    // --- encoding helpers ---------------------------------------------------

    std::vector<uint32_t> coeffs(uint32_t a) const {
        std::vector<uint32_t> c(n_);
        for (uint32_t i = 0; i < n_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }

    uint32_t from_coeffs(const std::vector<uint32_t>& c) const {
        uint64_t v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
        if (v >= q_) throw std::invalid_argument("field: encoding out of range");
        return static_cast<uint32_t>(v);
    }

    /// scalar from the prime subfield
    uint32_t from_int(uint64_t v) const { return static_cast<uint32_t>(v % p_); }

    /// elements fixed by frob(., m), i.e. the subfield GF(p^m); m must divide n
    std::vector<uint32_t> subfield(uint32_t m) const {
        if (m == 0 || n_ % m != 0) throw std::invalid_argument("field: subfield degree must divide n");
        std::vector<uint32_t> out;
        for (uint32_t a = 0; a < q_; ++a)
            if (in_subfield(a, m)) out.push_back(a);
        return out;
    }

    bool in_subfield(uint32_t a, uint32_t m) const {
        if (m == n_) return true;
        return frob(a, m) == a;
    }

    std::string descriptor() const {
        std::string s = "field{p=" + std::to_string(p_) + " n=" + std::to_string(n_) + " modulus=";
        for (size_t i = 0; i < modulus_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(modulus_[i]);
        }
        s += " generator=" + std::to_string(gen_) + "}";
        return s;
    }

  private:
    FieldCtx() = default;

    uint32_t add_digitwise(uint32_t a, uint32_t b) const {
        uint32_t r = 0, mul = 1;
        for (uint32_t i = 0; i < n_; ++i) {
            uint32_t da = a % p_, db = b % p_;
            uint32_t s = da + db;
            if (s >= p_) s -= p_;
            r += s * mul;
            mul *= p_;
            a /= p_;
            b /= p_;
        }
        return r;
    }

    uint32_t p_ = 0, n_ = 0, q_ = 0, gen_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> log_;        // log_[x] for x >= 1
    std::vector<uint32_t> exp_;        // theta^k for k in [0, 2(q-1))
    std::vector<uint32_t> neg_;
    std::vector<uint32_t> add_table_;  // q*q when q <= kAddTableMax
    std::vector<uint32_t> frob_;       // n tables of size q
};

inline std::shared_ptr<const FieldCtx> FieldCtx::build(uint32_t p, uint32_t n) {
    if (!is_prime_u64(p)) throw std::invalid_argument("ff_build: p must be prime");
    if (n == 0) throw std::invalid_argument("ff_build: extension degree must be >= 1");

    uint64_t ceiling = kDefaultCeiling;
    if (const char* env = std::getenv("POLARITY_LAB_CEILING")) {
        ceiling = std::strtoull(env, nullptr, 10);
        if (ceiling == 0 || ceiling > kHardCeiling)
            throw std::invalid_argument("ff_build: POLARITY_LAB_CEILING out of range");
    }
    uint64_t q = 1;
    for (uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > ceiling) throw std::invalid_argument("ff_build: field order exceeds ceiling");
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    FieldCtx& f = *ctx;
    f.p_ = p;
    f.n_ = n;
    f.q_ = static_cast<uint32_t>(q);

    // smallest monic irreducible of degree n in encoding order of (c0..c_{n-1})
    detail::PPoly mod(n + 1, 0);
    mod[n] = 1;
    for (uint64_t enc = 0;; ++enc) {
        if (enc >= q) throw std::runtime_error("ff_build: no irreducible modulus found");
        uint64_t v = enc;
        for (uint32_t i = 0; i < n; ++i) {
            mod[i] = static_cast<uint32_t>(v % p);
            v /= p;
        }
        if (detail::ppoly_irreducible(mod, p)) break;
    }
    f.modulus_.assign(mod.begin(), mod.end());

    // table-free multiply used during bootstrap
    auto raw_mul = [&](uint32_t a, uint32_t b) -> uint32_t {
        detail::PPoly pa, pb;
        for (uint32_t v = a; v; v /= p) pa.push_back(v % p);
        for (uint32_t v = b; v; v /= p) pb.push_back(v % p);
        detail::PPoly r = detail::ppoly_mulmod(pa, pb, mod, p);
        uint64_t enc = 0;
        for (size_t i = r.size(); i-- > 0;) enc = enc * p + r[i];
        return static_cast<uint32_t>(enc);
    };
    auto raw_pow = [&](uint32_t a, uint64_t e) -> uint32_t {
        uint32_t r = 1;
        while (e) {
            if (e & 1) r = raw_mul(r, a);
            a = raw_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    // smallest element (in encoding order) of multiplicative order q-1
    auto factors = prime_factors(q - 1);
    uint32_t gen = 0;
    for (uint32_t cand = 1; cand < q; ++cand) {
        bool ok = true;
        for (uint64_t l : factors) {
            if (raw_pow(cand, (q - 1) / l) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = cand;
            break;
        }
    }
    if (gen == 0 && q > 2) throw std::runtime_error("ff_build: no generator found");
    if (q == 2) gen = 1;
    f.gen_ = gen;

    // log/exp tables from the generator
    f.log_.assign(f.q_, 0);
    f.exp_.assign(2 * (f.q_ - 1), 0);
    uint32_t cur = 1;
    for (uint32_t k = 0; k < f.q_ - 1; ++k) {
        f.exp_[k] = cur;
        f.exp_[k + f.q_ - 1] = cur;
        f.log_[cur] = k;
        cur = raw_mul(cur, gen);
    }
    if (cur != 1) throw std::runtime_error("ff_build: generator order check failed");

    f.neg_.assign(f.q_, 0);
    for (uint32_t a = 0; a < f.q_; ++a) {
        uint32_t r = 0, m = 1, v = a;
        for (uint32_t i = 0; i < n; ++i) {
            uint32_t d = v % p;
            r += (d == 0 ? 0 : p - d) * m;
            m *= p;
            v /= p;
        }
        f.neg_[a] = r;
    }

    if (f.q_ <= kAddTableMax) {
        f.add_table_.assign(static_cast<size_t>(f.q_) * f.q_, 0);
        for (uint32_t a = 0; a < f.q_; ++a)
            for (uint32_t b = 0; b <= a; ++b) {
                uint32_t s = f.add_digitwise(a, b);
                f.add_table_[static_cast<size_t>(a) * f.q_ + b] = s;
                f.add_table_[static_cast<size_t>(b) * f.q_ + a] = s;
            }
    }

    // frobenius tables x -> x^(p^k), k = 0..n-1
    f.frob_.assign(static_cast<size_t>(n) * f.q_, 0);
    for (uint32_t a = 0; a < f.q_; ++a) f.frob_[a] = a;
    for (uint32_t k = 1; k < n; ++k) {
        for (uint32_t a = 0; a < f.q_; ++a) {
            uint32_t prev = f.frob_[static_cast<size_t>(k - 1) * f.q_ + a];
            f.frob_[static_cast<size_t>(k) * f.q_ + a] = f.pow(prev, p);
        }
    }
    return ctx;
}

/// Spec-level entry point: GF(p^n) under the desk-scale ceiling.
inline std::shared_ptr<const FieldCtx> ff_build(uint32_t p, uint32_t n) { return FieldCtx::build(p, n); }

/// Checked element wrapper.  Mixing elements of different contexts throws.
struct FieldElement {
    const FieldCtx* f = nullptr;
    uint32_t v = 0;

    FieldElement() = default;
    FieldElement(const FieldCtx& ctx, uint32_t value) : f(&ctx), v(value) {
        if (value >= ctx.q()) throw std::invalid_argument("field element: encoding out of range");
    }

    static void same(const FieldElement& a, const FieldElement& b) {
        if (a.f != b.f) throw std::invalid_argument("field element: context mismatch");
    }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        same(a, b);
        return {*a.f, a.f->add(a.v, b.v)};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        same(a, b);
        return {*a.f, a.f->sub(a.v, b.v)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        same(a, b);
        return {*a.f, a.f->mul(a.v, b.v)};
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        same(a, b);
        return {*a.f, a.f->div(a.v, b.v)};
    }
    FieldElement operator-() const { return {*f, f->neg(v)}; }
    FieldElement pow(int64_t e) const { return {*f, f->pow(v, e)}; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.f == b.f && a.v == b.v; }
};

/// x^(p^k); k = n/2 applications realize the conjugations used by the
/// square-order constructions.
inline FieldElement frobenius(const FieldCtx& ctx, FieldElement x, uint32_t k) {
    if (x.f != &ctx) throw std::invalid_argument("frobenius: context mismatch");
    return {ctx, ctx.frob(x.v, k)};
}

enum class SquareClass {
    non_square,
    square,
    zero_not_in_box,       // zero: a square, but not a member of the nonzero-square set
    even_char_all_square,  // characteristic 2: squaring is a bijection
};

inline SquareClass classify_square(const FieldCtx& ctx, uint32_t x) {
    if (ctx.p() == 2) return SquareClass::even_char_all_square;
    if (x == 0) return SquareClass::zero_not_in_box;
    // Euler criterion: x^((q-1)/2) = 1 exactly for the nonzero squares
    return ctx.pow(x, (ctx.q() - 1) / 2) == 1 ? SquareClass::square : SquareClass::non_square;
}

/// true iff x = w^2 for some w (zero and even characteristic report true)
inline bool is_square(const FieldCtx& ctx, uint32_t x) {
    return classify_square(ctx, x) != SquareClass::non_square;
}

/// Partition of a negation-closed set of nonzero elements into half-sets with
/// a in plus <=> -a in minus.  Tie-break: a joins plus when enc(a) < enc(-a).
struct SignPartition {
    std::vector<uint32_t> plus, minus;
    std::vector<uint8_t> side;  // indexed by encoding: 0 = absent, 1 = plus, 2 = minus

    bool in_plus(uint32_t a) const { return a < side.size() && side[a] == 1; }
    bool in_minus(uint32_t a) const { return a < side.size() && side[a] == 2; }
};

inline SignPartition sign_partition_of(const FieldCtx& ctx, const std::vector<uint32_t>& universe) {
    if (ctx.p() == 2) throw std::invalid_argument("half_partition: undefined in characteristic 2 (a = -a)");
    SignPartition sp;
    sp.side.assign(ctx.q(), 0);
    for (uint32_t a : universe) {
        if (a == 0) continue;
        uint32_t na = ctx.neg(a);
        if (a < na) {
            sp.plus.push_back(a);
            sp.side[a] = 1;
        } else {
            sp.minus.push_back(a);
            sp.side[a] = 2;
        }
    }
    return sp;
}

inline SignPartition half_partition(const FieldCtx& ctx) {
    std::vector<uint32_t> all;
    all.reserve(ctx.q() - 1);
    for (uint32_t a = 1; a < ctx.q(); ++a) all.push_back(a);
    return sign_partition_of(ctx, all);
}

/// half-partition of the nonzero elements of the subfield GF(p^m)
inline SignPartition subfield_half_partition(const FieldCtx& ctx, uint32_t m) {
    return sign_partition_of(ctx, ctx.subfield(m));
}

// --- polynomials over a built field (coefficients are encodings) -----------

inline uint32_t poly_eval(const FieldCtx& ctx, const std::vector<uint32_t>& coeffs, uint32_t x) {
    uint32_t r = 0;
    for (size_t i = coeffs.size(); i-- > 0;) r = ctx.add(ctx.mul(r, x), coeffs[i]);
    return r;
}

inline std::vector<uint32_t> poly_table(const FieldCtx& ctx, const std::vector<uint32_t>& coeffs) {
    std::vector<uint32_t> t(ctx.q());
    for (uint32_t x = 0; x < ctx.q(); ++x) t[x] = poly_eval(ctx, coeffs, x);
    return t;
}

/// monomial c*X^k as a coefficient vector
inline std::vector<uint32_t> monomial(uint32_t k, uint32_t c = 1) {
    std::vector<uint32_t> f(k + 1, 0);
    f[k] = c;
    return f;
}

/// Planarity: x -> f(x+a) - f(x) must be a bijection for every a != 0.
/// Returns the first witnessing a on failure.
inline std::optional<uint32_t> planar_witness(const FieldCtx& ctx, const std::vector<uint32_t>& f) {
    if (f.empty()) throw std::invalid_argument("planar_check: empty polynomial");
    if (ctx.p() == 2) throw std::invalid_argument("planar_check: defined for odd characteristic");
    auto table = poly_table(ctx, f);
    std::vector<uint8_t> seen(ctx.q());
    for (uint32_t a = 1; a < ctx.q(); ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (uint32_t x = 0; x < ctx.q(); ++x) {
            uint32_t d = ctx.sub(table[ctx.add(x, a)], table[x]);
            if (seen[d]) return a;
            seen[d] = 1;
        }
    }
    return std::nullopt;
}

inline bool planar_check(const FieldCtx& ctx, const std::vector<uint32_t>& f) {
    return !planar_witness(ctx, f).has_value();
}

}  // namespace plab

#endif  // POLARITY_LAB_FINITE_FIELD_HPP
