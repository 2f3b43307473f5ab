#ifndef POLARITY_LAB_PLANES_HPP
#define POLARITY_LAB_PLANES_HPP

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "polarity_lab/certificate.hpp"
#include "polarity_lab/finite_field.hpp"
#include "polarity_lab/support.hpp"

namespace plab {

/// Two-dimensional algebra over GF(q) with basis {1, lambda}; elements are
/// packed as enc(x) * q + enc(y) for x + lambda*y.  Two kinds:
///   section3: (x+ly)(z+lt) = xz + theta*t*y^sigma + l(yz + x^sigma*t),
///             over GF(p^2n) with sigma the half-degree Frobenius,
///   dickson:  (x+ly)(z+lt) = xz + a*(yt)^(p^r) + l(xt + yz), a a non-square
///             (commutative).
class DivisionRing {
  public:
    enum class Kind { section3, dickson };

    static std::shared_ptr<const DivisionRing> build_section3(std::shared_ptr<const FieldCtx> base) {
        if (base->p() == 2) throw std::invalid_argument("division ring: even characteristic not supported");
        if (base->n() % 2 != 0)
            throw std::invalid_argument("division ring (section3): base order must be p^(2n)");
        auto d = std::shared_ptr<DivisionRing>(new DivisionRing());
        d->kind_ = Kind::section3;
        d->base_ = std::move(base);
        d->sigma_k_ = d->base_->n() / 2;
        d->theta_ = d->base_->generator();
        return d;
    }

    static std::shared_ptr<const DivisionRing> build_dickson(std::shared_ptr<const FieldCtx> base,
                                                             uint32_t nonsquare, uint32_t r) {
        if (base->p() == 2) throw std::invalid_argument("division ring: even characteristic not supported");
        if (base->n() <= 1) throw std::invalid_argument("division ring (dickson): requires q = p^n with n > 1");
        if (r == 0 || r >= base->n()) throw std::invalid_argument("division ring (dickson): need 1 <= r < n");
        if (is_square(*base, nonsquare))
            throw std::invalid_argument("division ring (dickson): parameter a must be a non-square");
        auto d = std::shared_ptr<DivisionRing>(new DivisionRing());
        d->kind_ = Kind::dickson;
        d->base_ = std::move(base);
        d->nonsquare_ = nonsquare;
        d->frob_r_ = r;
        return d;
    }

    Kind kind() const { return kind_; }
    const FieldCtx& base() const { return *base_; }
    std::shared_ptr<const FieldCtx> base_ptr() const { return base_; }
    uint32_t size() const { return base_->q() * base_->q(); }
    uint32_t sigma_k() const { return sigma_k_; }
    uint32_t nonsquare() const { return nonsquare_; }
    uint32_t frob_r() const { return frob_r_; }

    uint32_t pack(uint32_t x, uint32_t y) const { return x * base_->q() + y; }
    uint32_t x_of(uint32_t u) const { return u / base_->q(); }
    uint32_t y_of(uint32_t u) const { return u % base_->q(); }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return pack(1, 0); }

    uint32_t add(uint32_t u, uint32_t v) const {
        const FieldCtx& f = *base_;
        return pack(f.add(x_of(u), x_of(v)), f.add(y_of(u), y_of(v)));
    }

    uint32_t neg(uint32_t u) const {
        const FieldCtx& f = *base_;
        return pack(f.neg(x_of(u)), f.neg(y_of(u)));
    }

    uint32_t sub(uint32_t u, uint32_t v) const { return add(u, neg(v)); }

    uint32_t mul(uint32_t u, uint32_t v) const {
        const FieldCtx& f = *base_;
        uint32_t x = x_of(u), y = y_of(u), z = x_of(v), t = y_of(v);
        if (kind_ == Kind::section3) {
            uint32_t first = f.add(f.mul(x, z), f.mul(theta_, f.mul(t, f.frob(y, sigma_k_))));
            uint32_t second = f.add(f.mul(y, z), f.mul(f.frob(x, sigma_k_), t));
            return pack(first, second);
        }
        uint32_t first = f.add(f.mul(x, z), f.mul(nonsquare_, f.frob(f.mul(y, t), frob_r_)));
        uint32_t second = f.add(f.mul(x, t), f.mul(y, z));
        return pack(first, second);
    }

    /// section3 conjugation (x + ly)^alpha = x + l*y^sigma
    uint32_t alpha(uint32_t u) const {
        if (kind_ != Kind::section3) throw std::invalid_argument("division ring: alpha is a section3 map");
        return pack(x_of(u), base_->frob(y_of(u), sigma_k_));
    }

    std::string descriptor() const {
        std::string s = "ring{kind=";
        s += kind_ == Kind::section3 ? "section3" : "dickson";
        if (kind_ == Kind::section3)
            s += " theta=" + std::to_string(theta_);
        else
            s += " a=" + std::to_string(nonsquare_) + " r=" + std::to_string(frob_r_);
        s += " base=" + base_->descriptor() + "}";
        return s;
    }

    /// Exhaustive structural verification.  Distributivity on all triples is
    /// checked through its equivalent linear-extension form: u -> u*w is
    /// additive for every w iff it agrees everywhere with the prime-field
    /// linear extension of its values on a basis, which covers all (u,v,w)
    /// with |D|^2*dim work instead of |D|^3.
    CheckCertificate verify() const {
        CheckCertificate cert = make_check("division-ring-axioms", descriptor());
        const FieldCtx& f = *base_;
        const uint32_t q = f.q();
        const uint32_t nD = size();
        const uint32_t dim = 2 * f.n();

        std::vector<uint32_t> basis(dim);
        for (uint32_t j = 0; j < f.n(); ++j) {
            uint32_t e = 1;
            for (uint32_t i = 0; i < j; ++i) e *= f.p();
            basis[j] = pack(e, 0);
            basis[f.n() + j] = pack(0, e);
        }

        uint32_t e1 = one();
        for (uint32_t u = 0; u < nD && cert.pass; ++u) {
            if (mul(e1, u) != u || mul(u, e1) != u) {
                cert.pass = false;
                cert.witness = "identity fails at u=" + std::to_string(u);
            }
        }

        std::vector<uint32_t> img(dim);
        auto linear_extension_matches = [&](bool left) {
            for (uint32_t w = 0; w < nD; ++w) {
                for (uint32_t j = 0; j < dim; ++j) img[j] = left ? mul(basis[j], w) : mul(w, basis[j]);
                for (uint32_t u = 0; u < nD; ++u) {
                    uint32_t acc = 0;
                    uint32_t xv = u / q, yv = u % q;
                    for (uint32_t j = 0; j < f.n(); ++j) {
                        uint32_t dx = xv % f.p(), dy = yv % f.p();
                        xv /= f.p();
                        yv /= f.p();
                        if (dx) {
                            uint32_t t = img[j];
                            acc = add(acc, pack(f.mul(dx, x_of(t)), f.mul(dx, y_of(t))));
                        }
                        if (dy) {
                            uint32_t t = img[f.n() + j];
                            acc = add(acc, pack(f.mul(dy, x_of(t)), f.mul(dy, y_of(t))));
                        }
                    }
                    uint32_t direct = left ? mul(u, w) : mul(w, u);
                    if (acc != direct) {
                        cert.pass = false;
                        cert.witness = std::string(left ? "left" : "right") +
                                       " distributivity fails at u=" + std::to_string(u) +
                                       " w=" + std::to_string(w);
                        return;
                    }
                }
            }
        };
        if (cert.pass) linear_extension_matches(true);
        if (cert.pass) linear_extension_matches(false);

        uint64_t zero_products = 0;
        for (uint32_t u = 1; u < nD && cert.pass; ++u)
            for (uint32_t v = 1; v < nD; ++v)
                if (mul(u, v) == 0) {
                    ++zero_products;
                    cert.pass = false;
                    cert.witness = "zero divisor: u=" + std::to_string(u) + " v=" + std::to_string(v);
                    break;
                }

        if (kind_ == Kind::dickson && cert.pass) {
            for (uint32_t u = 0; u < nD && cert.pass; ++u)
                for (uint32_t v = 0; v < u; ++v)
                    if (mul(u, v) != mul(v, u)) {
                        cert.pass = false;
                        cert.witness = "commutativity fails at u=" + std::to_string(u) + " v=" + std::to_string(v);
                        break;
                    }
            cert.detail("commutative", std::string("true"));
        }

        cert.detail("size", uint64_t{nD});
        cert.detail("zero_divisors", zero_products);
        return cert;
    }

  private:
    DivisionRing() = default;

    Kind kind_ = Kind::section3;
    std::shared_ptr<const FieldCtx> base_;
    uint32_t sigma_k_ = 0;
    uint32_t theta_ = 0;
    uint32_t nonsquare_ = 0;
    uint32_t frob_r_ = 0;
};

/// spec-facing factory
inline std::shared_ptr<const DivisionRing> build_division_ring(DivisionRing::Kind kind,
                                                               std::shared_ptr<const FieldCtx> base,
                                                               uint32_t nonsquare = 0, uint32_t r = 0) {
    auto ring = kind == DivisionRing::Kind::section3 ? DivisionRing::build_section3(std::move(base))
                                                     : DivisionRing::build_dickson(std::move(base), nonsquare, r);
    auto cert = ring->verify();
    if (!cert.pass) throw std::runtime_error("build_division_ring: axioms failed: " + cert.witness);
    return ring;
}

enum class PlaneKind { pg2, pi_f, pi_d };

struct PointRef {
    enum class Tag { affine, slope, infinity, homogeneous } tag;
    uint32_t a = 0, b = 0, c = 0;
};

/// PG(2,q) id scheme: (1,a,b) -> a*q + b, (0,1,c) -> q^2 + c, (0,0,1) last.
inline std::array<uint32_t, 3> pg2_triple_of(uint32_t q, uint32_t id) {
    if (id < q * q) return {1, id / q, id % q};
    if (id < q * q + q) return {0, 1, id - q * q};
    return {0, 0, 1};
}

inline uint32_t pg2_id_of(const FieldCtx& f, uint32_t x0, uint32_t x1, uint32_t x2) {
    uint32_t q = f.q();
    if (x0 != 0) {
        uint32_t i = f.inv(x0);
        return f.mul(x1, i) * q + f.mul(x2, i);
    }
    if (x1 != 0) return q * q + f.mul(x2, f.inv(x1));
    if (x2 != 0) return q * q + q;
    throw std::invalid_argument("pg2: zero vector is not a point");
}

/// A finite projective plane with canonical integer point/line ids.
///
/// PG(2,q): both points and lines enumerate the normalized triples
///   (1,a,b) -> a*q + b, (0,1,c) -> q^2 + c, (0,0,1) -> q^2 + q.
/// Coordinate planes (pi_f, pi_d): affine (x,y) -> enc(x)*Q + enc(y) first in
/// row-major order, then slope points (x) -> Q^2 + enc(x), then (inf);
/// lines [a,b] -> enc(a)*Q + enc(b), [c] -> Q^2 + enc(c), [inf] last.
///
/// Incidence is stored as a bit matrix for orders <= 81 and evaluated from
/// the defining equations on demand above that.
class Plane {
  public:
    static constexpr uint32_t kMaterializeMaxOrder = 81;

    PlaneKind kind = PlaneKind::pg2;
    bool dickson_lines = false;  // pi_d: lines satisfy y = m*x + k instead of m*x + y = k
    uint32_t order = 0;

    std::shared_ptr<const FieldCtx> field;    // pg2 and pi_f
    std::shared_ptr<const DivisionRing> ring;  // pi_d
    std::vector<uint32_t> f_coeffs;           // pi_f
    std::vector<uint32_t> f_table;            // pi_f

    uint32_t n_points() const { return order * order + order + 1; }
    uint32_t n_lines() const { return n_points(); }
    bool materialized() const { return inc_rows_.rows() > 0; }

    // --- id decoding --------------------------------------------------------

    PointRef point(uint32_t id) const { return decode(id); }
    PointRef line(uint32_t id) const { return decode(id); }

    std::array<uint32_t, 3> pg2_triple(uint32_t id) const { return pg2_triple_of(order, id); }

    uint32_t pg2_id(uint32_t x0, uint32_t x1, uint32_t x2) const { return pg2_id_of(*field, x0, x1, x2); }

    uint32_t affine_id(uint32_t x, uint32_t y) const { return x * order + y; }
    uint32_t slope_id(uint32_t c) const { return order * order + c; }
    uint32_t infinity_id() const { return order * order + order; }

    // --- incidence ----------------------------------------------------------

    bool incident(uint32_t p, uint32_t l) const {
        if (materialized()) return inc_rows_.get(p, l);
        return incident_formula(p, l);
    }

    bool incident_formula(uint32_t p, uint32_t l) const {
        const uint32_t q2 = order * order;
        if (kind == PlaneKind::pg2) {
            auto P = pg2_triple(p), L = pg2_triple(l);
            const FieldCtx& f = *field;
            uint32_t dot = f.add(f.add(f.mul(P[0], L[0]), f.mul(P[1], L[1])), f.mul(P[2], L[2]));
            return dot == 0;
        }
        bool p_inf = p == infinity_id(), l_inf = l == infinity_id();
        if (p_inf) return l >= q2;                   // on [c] and [inf]
        if (p >= q2) {                               // slope point (c)
            if (l_inf) return true;
            if (l >= q2) return false;               // slope points miss vertical lines
            return (p - q2) == l / order;            // (c) on [a,b] iff c = a
        }
        uint32_t x = p / order, y = p % order;
        if (l_inf) return false;
        if (l >= q2) return x == (l - q2);           // vertical [c]
        uint32_t a = l / order, b = l % order;
        if (kind == PlaneKind::pi_f) {
            const FieldCtx& f = *field;
            return y == f.add(f_table[f.sub(x, a)], b);
        }
        const DivisionRing& D = *ring;
        if (dickson_lines) return y == D.add(D.mul(a, x), b);  // y = m*x + k
        return D.add(D.mul(a, x), y) == b;                     // m*x + y = k
    }

    /// the order+1 lines through a point, by formula
    std::vector<uint32_t> lines_through(uint32_t p) const {
        std::vector<uint32_t> out;
        out.reserve(order + 1);
        const uint32_t q2 = order * order;
        if (kind == PlaneKind::pg2) {
            pg2_pencil(pg2_triple(p), [&](uint32_t id) { out.push_back(id); });
            return out;
        }
        if (p == infinity_id()) {
            for (uint32_t c = 0; c < order; ++c) out.push_back(q2 + c);
            out.push_back(infinity_id());
            return out;
        }
        if (p >= q2) {
            uint32_t c = p - q2;
            for (uint32_t b = 0; b < order; ++b) out.push_back(c * order + b);
            out.push_back(infinity_id());
            return out;
        }
        uint32_t x = p / order, y = p % order;
        if (kind == PlaneKind::pi_f) {
            const FieldCtx& f = *field;
            for (uint32_t a = 0; a < order; ++a) out.push_back(a * order + f.sub(y, f_table[f.sub(x, a)]));
        } else {
            const DivisionRing& D = *ring;
            for (uint32_t m = 0; m < order; ++m) {
                uint32_t k = dickson_lines ? D.sub(y, D.mul(m, x)) : D.add(D.mul(m, x), y);
                out.push_back(m * order + k);
            }
        }
        out.push_back(q2 + x);  // the vertical line [x]
        return out;
    }

    /// the order+1 points on a line, by formula
    std::vector<uint32_t> points_on(uint32_t l) const {
        std::vector<uint32_t> out;
        out.reserve(order + 1);
        const uint32_t q2 = order * order;
        if (kind == PlaneKind::pg2) {
            pg2_pencil(pg2_triple(l), [&](uint32_t id) { out.push_back(id); });
            return out;
        }
        if (l == infinity_id()) {
            for (uint32_t c = 0; c < order; ++c) out.push_back(q2 + c);
            out.push_back(infinity_id());
            return out;
        }
        if (l >= q2) {
            uint32_t c = l - q2;
            for (uint32_t y = 0; y < order; ++y) out.push_back(c * order + y);
            out.push_back(infinity_id());
            return out;
        }
        uint32_t a = l / order, b = l % order;
        if (kind == PlaneKind::pi_f) {
            const FieldCtx& f = *field;
            for (uint32_t x = 0; x < order; ++x) out.push_back(x * order + f.add(f_table[f.sub(x, a)], b));
        } else {
            const DivisionRing& D = *ring;
            for (uint32_t x = 0; x < order; ++x) {
                uint32_t y = dickson_lines ? D.add(D.mul(a, x), b) : D.sub(b, D.mul(a, x));
                out.push_back(x * order + y);
            }
        }
        out.push_back(q2 + a);  // the slope point (a)
        return out;
    }

    const BitMatrix& inc_rows() const { return inc_rows_; }
    const BitMatrix& inc_cols() const { return inc_cols_; }

    void materialize() {
        uint32_t n = n_points();
        inc_rows_ = BitMatrix(n, n);
        inc_cols_ = BitMatrix(n, n);
        for (uint32_t l = 0; l < n; ++l)
            for (uint32_t p : points_on(l)) {
                inc_rows_.set(p, l);
                inc_cols_.set(l, p);
            }
    }

    // --- labels & provenance ------------------------------------------------

    std::string point_label(uint32_t id) const { return label(id, true); }
    std::string line_label(uint32_t id) const { return label(id, false); }

    std::string descriptor() const {
        switch (kind) {
            case PlaneKind::pg2:
                return "plane{pg2 " + field->descriptor() + "}";
            case PlaneKind::pi_f: {
                std::string s = "plane{pi-f f=";
                for (size_t i = 0; i < f_coeffs.size(); ++i) {
                    if (i) s += ',';
                    s += std::to_string(f_coeffs[i]);
                }
                return s + " " + field->descriptor() + "}";
            }
            default:
                return "plane{pi-d " + ring->descriptor() + "}";
        }
    }

  private:
    PointRef decode(uint32_t id) const {
        if (kind == PlaneKind::pg2) {
            auto t = pg2_triple(id);
            return {PointRef::Tag::homogeneous, t[0], t[1], t[2]};
        }
        const uint32_t q2 = order * order;
        if (id < q2) return {PointRef::Tag::affine, id / order, id % order, 0};
        if (id < q2 + order) return {PointRef::Tag::slope, id - q2, 0, 0};
        return {PointRef::Tag::infinity, 0, 0, 0};
    }

    std::string label(uint32_t id, bool as_point) const {
        PointRef r = decode(id);
        char open = as_point ? '(' : '[';
        char close = as_point ? ')' : ']';
        switch (r.tag) {
            case PointRef::Tag::homogeneous:
                return std::string(1, open) + std::to_string(r.a) + ":" + std::to_string(r.b) + ":" +
                       std::to_string(r.c) + std::string(1, close);
            case PointRef::Tag::affine:
                return std::string(1, open) + std::to_string(r.a) + "," + std::to_string(r.b) +
                       std::string(1, close);
            case PointRef::Tag::slope:
                return std::string(1, open) + std::to_string(r.a) + std::string(1, close);
            default:
                return std::string(1, open) + "inf" + std::string(1, close);
        }
    }

    /// the q+1 projective classes orthogonal to t (pg2): used both for the
    /// pencil of lines through a point and for the points on a line
    template <typename Fn>
    void pg2_pencil(const std::array<uint32_t, 3>& t, Fn&& fn) const {
        const FieldCtx& f = *field;
        std::array<uint32_t, 3> v1{}, v2{};
        if (t[0] != 0) {
            v1 = {f.neg(t[1]), t[0], 0};
            v2 = {f.neg(t[2]), 0, t[0]};
        } else if (t[1] != 0) {
            v1 = {1, 0, 0};
            v2 = {0, f.neg(t[2]), t[1]};
        } else {
            v1 = {1, 0, 0};
            v2 = {0, 1, 0};
        }
        fn(pg2_id(v2[0], v2[1], v2[2]));
        for (uint32_t s = 0; s < order; ++s) {
            std::array<uint32_t, 3> w{};
            for (int i = 0; i < 3; ++i) w[i] = f.add(v1[i], f.mul(s, v2[i]));
            fn(pg2_id(w[0], w[1], w[2]));
        }
    }

    BitMatrix inc_rows_;  // point -> incident lines
    BitMatrix inc_cols_;  // line -> incident points
};

inline std::shared_ptr<const Plane> build_pg2(std::shared_ptr<const FieldCtx> ctx) {
    auto pl = std::make_shared<Plane>();
    pl->kind = PlaneKind::pg2;
    pl->order = ctx->q();
    pl->field = std::move(ctx);
    if (pl->order <= Plane::kMaterializeMaxOrder) pl->materialize();
    return pl;
}

/// test hook: builds the incidence structure without the planarity gate
inline std::shared_ptr<const Plane> build_pi_f_unchecked(std::shared_ptr<const FieldCtx> ctx,
                                                         const std::vector<uint32_t>& f) {
    auto pl = std::make_shared<Plane>();
    pl->kind = PlaneKind::pi_f;
    pl->order = ctx->q();
    pl->f_coeffs = f;
    pl->f_table = poly_table(*ctx, f);
    pl->field = std::move(ctx);
    if (pl->order <= Plane::kMaterializeMaxOrder) pl->materialize();
    return pl;
}

inline std::shared_ptr<const Plane> build_pi_f(std::shared_ptr<const FieldCtx> ctx,
                                               const std::vector<uint32_t>& f) {
    if (auto w = planar_witness(*ctx, f))
        throw std::invalid_argument("build_pi_f: polynomial is not planar (difference map fails at a=" +
                                    std::to_string(*w) + ")");
    return build_pi_f_unchecked(std::move(ctx), f);
}

/// Plane coordinatized by a division ring.  Line convention follows the kind:
/// section3 lines are [m,k] = {(x,y) : m*x + y = k}; dickson (commutative)
/// lines are [m,k] = {(x,y) : y = m*x + k}.
inline std::shared_ptr<const Plane> build_coordinatized_plane(std::shared_ptr<const DivisionRing> ring) {
    auto pl = std::make_shared<Plane>();
    pl->kind = PlaneKind::pi_d;
    pl->dickson_lines = ring->kind() == DivisionRing::Kind::dickson;
    pl->order = ring->size();
    pl->ring = std::move(ring);
    if (pl->order <= Plane::kMaterializeMaxOrder) pl->materialize();
    return pl;
}

namespace detail {

// pair coverage scan: every one of the C(n,2) pairs must be covered by
// exactly one block (lines covering point pairs, or dually)
template <typename BlockPoints>
bool unique_pair_coverage(uint32_t n, uint32_t n_blocks, BlockPoints&& members, std::string& witness,
                          const char* what) {
    auto pair_index = [n](uint64_t i, uint64_t j) {  // i < j
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
    };
    uint64_t total = static_cast<uint64_t>(n) * (n - 1) / 2;
    std::vector<uint64_t> seen((total + 63) / 64, 0);
    uint64_t covered = 0;
    for (uint32_t b = 0; b < n_blocks; ++b) {
        auto pts = members(b);
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                uint32_t u = pts[i], v = pts[j];
                if (u == v) {
                    witness = std::string(what) + " " + std::to_string(b) + " repeats id " + std::to_string(u);
                    return false;
                }
                if (u > v) std::swap(u, v);
                uint64_t idx = pair_index(u, v);
                if (seen[idx >> 6] >> (idx & 63) & 1) {
                    witness = "ids " + std::to_string(u) + "," + std::to_string(v) + " share two " + what + "s";
                    return false;
                }
                seen[idx >> 6] |= 1ULL << (idx & 63);
                ++covered;
            }
    }
    if (covered != total) {
        witness = "pair coverage " + std::to_string(covered) + " of " + std::to_string(total);
        return false;
    }
    return true;
}

}  // namespace detail

/// Checks the projective plane axioms.  Exhaustive for materialized planes;
/// seeded pair sampling above that (reported in the certificate).
inline CheckCertificate verify_plane_axioms(const Plane& pl, uint64_t seed = 0, uint64_t sample_pairs = 100000) {
    CheckCertificate cert = make_check("plane-axioms", pl.descriptor());
    const uint32_t n = pl.n_points();
    cert.detail("order", uint64_t{pl.order});
    cert.detail("points", uint64_t{n});
    cert.detail("lines", uint64_t{n});

    if (pl.materialized()) {
        for (uint32_t p = 0; p < n && cert.pass; ++p)
            if (pl.inc_rows().row_popcount(p) != pl.order + 1) {
                cert.pass = false;
                cert.witness = "point " + std::to_string(p) + " lies on " +
                               std::to_string(pl.inc_rows().row_popcount(p)) + " lines";
            }
        for (uint32_t l = 0; l < n && cert.pass; ++l)
            if (pl.inc_cols().row_popcount(l) != pl.order + 1) {
                cert.pass = false;
                cert.witness = "line " + std::to_string(l) + " has " +
                               std::to_string(pl.inc_cols().row_popcount(l)) + " points";
            }
        if (cert.pass) {
            std::vector<uint32_t> buf;
            auto line_members = [&](uint32_t l) {
                buf.clear();
                pl.inc_cols().for_each_in_row(l, [&](uint32_t p) { buf.push_back(p); });
                return buf;
            };
            cert.pass = detail::unique_pair_coverage(n, n, line_members, cert.witness, "line");
        }
        if (cert.pass) {
            std::vector<uint32_t> buf;
            auto point_members = [&](uint32_t p) {
                buf.clear();
                pl.inc_rows().for_each_in_row(p, [&](uint32_t l) { buf.push_back(l); });
                return buf;
            };
            cert.pass = detail::unique_pair_coverage(n, n, point_members, cert.witness, "point");
        }
        return cert;
    }

    cert.mode = "sampled(seed=" + std::to_string(seed) + ",pairs=" + std::to_string(sample_pairs) + ")";
    SplitMix64 rng(seed);
    for (uint64_t it = 0; it < sample_pairs && cert.pass; ++it) {
        uint32_t p1 = static_cast<uint32_t>(rng.below(n));
        uint32_t p2 = static_cast<uint32_t>(rng.below(n));
        if (p1 == p2) continue;
        uint32_t common = 0;
        for (uint32_t l : pl.lines_through(p1))
            if (pl.incident_formula(p2, l)) ++common;
        if (common != 1) {
            cert.pass = false;
            cert.witness = "points " + std::to_string(p1) + "," + std::to_string(p2) + " lie on " +
                           std::to_string(common) + " common lines";
        }
        uint32_t l1 = static_cast<uint32_t>(rng.below(n));
        uint32_t l2 = static_cast<uint32_t>(rng.below(n));
        if (l1 != l2 && cert.pass) {
            uint32_t meet = 0;
            for (uint32_t p : pl.points_on(l1))
                if (pl.incident_formula(p, l2)) ++meet;
            if (meet != 1) {
                cert.pass = false;
                cert.witness = "lines " + std::to_string(l1) + "," + std::to_string(l2) + " meet in " +
                               std::to_string(meet) + " points";
            }
        }
    }
    // line-size spot checks with distinctness
    for (uint64_t it = 0; it < 64 && cert.pass; ++it) {
        uint32_t l = static_cast<uint32_t>(rng.below(n));
        auto pts = pl.points_on(l);
        std::sort(pts.begin(), pts.end());
        if (pts.size() != pl.order + 1 || std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
            cert.pass = false;
            cert.witness = "line " + std::to_string(l) + " does not have order+1 distinct points";
        }
    }
    return cert;
}

}  // namespace plab

#endif  // POLARITY_LAB_PLANES_HPP
