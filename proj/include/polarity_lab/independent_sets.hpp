#ifndef POLARITY_LAB_INDEPENDENT_SETS_HPP
#define POLARITY_LAB_INDEPENDENT_SETS_HPP

#include <algorithm>
#include <array>
#include <memory>
#include <string>
#include <vector>

#include "polarity_lab/exact_surd.hpp"
#include "polarity_lab/graphs.hpp"

namespace plab {

/// Both printed forms of the eigenvalue bound, evaluated exactly.  The two do
/// not coincide: eq1 - closed simplifies to q - 1, and the discrepancy is
/// flagged rather than silently resolved.
struct HoffmanBound {
    uint64_t q = 0;
    Surd eq1;         // -(q^2+q+1)(-sqrt q) / (q+1-sqrt q)
    Surd closed;      // q^(3/2) + q^(1/2) + 1
    Surd difference;  // eq1 - closed
    bool discrepant = false;
    int64_t closed_ceiling = 0;

    std::string to_text() const {
        Record r("hoffman-bound");
        r.add("q", q);
        r.add("eq1_exact", eq1.str());
        r.add("closed_form_exact", closed.str());
        r.add("closed_form_ceiling", static_cast<int64_t>(closed_ceiling));
        r.add("difference", difference.str());
        r.add("forms_agree", !discrepant);
        return r.to_text();
    }
};

inline HoffmanBound hoffman_bound(uint64_t q) {
    if (q < 2) throw std::invalid_argument("hoffman_bound: q must be at least 2");
    HoffmanBound hb;
    hb.q = q;
    int64_t iq = static_cast<int64_t>(q);
    Surd n_pts = Surd::rational(iq * iq + iq + 1, 1, q);
    Surd sqrt_q = Surd::root(1, q);
    Surd numer = (Surd::rational(0, 1, q) - n_pts) * (Surd::rational(0, 1, q) - sqrt_q);
    Surd denom = Surd::rational(iq + 1, 1, q) - sqrt_q;
    hb.eq1 = numer / denom;
    hb.closed = sqrt_q * Surd::rational(iq + 1, 1, q) + Surd::rational(1, 1, q);
    hb.difference = hb.eq1 - hb.closed;
    hb.discrepant = hb.difference.sign() != 0;
    hb.closed_ceiling = hb.closed.ceil_int();
    return hb;
}

/// Verifiable independent-set claim.
struct IndepCertificate {
    std::string graph_descriptor;
    std::string construction;
    uint64_t size = 0;
    std::vector<uint32_t> vertices;
    bool verified = false;
    std::string verify_mode;
    bool absolute_free = false;
    std::string provider_log;
    std::string formula;  // the construction's size formula, instantiated
    uint64_t plane_order = 0;
    std::string notes;

    std::string to_text() const {
        Record r("independent-set");
        r.add("graph", graph_descriptor);
        r.add("graph_hash", hex64(fnv1a64(graph_descriptor)));
        r.add("construction", construction);
        r.add("size", size);
        r.add("verified", verified);
        r.add("verify_mode", verify_mode);
        r.add("absolute_free", absolute_free);
        if (!formula.empty()) r.add("formula", formula);
        if (plane_order >= 2) {
            auto hb = hoffman_bound(plane_order);
            r.add("hoffman_eq1", hb.eq1.str());
            r.add("hoffman_closed", hb.closed.str());
            r.add("hoffman_ceiling", static_cast<int64_t>(hb.closed_ceiling));
        }
        if (!provider_log.empty()) r.add("provider", provider_log);
        if (!notes.empty()) r.add("notes", notes);
        if (vertices.size() <= kIdListInlineLimit) r.add("vertices", join_ids(vertices));
        r.add("vertices_hash", hex64(fnv1a64(vertices)));
        return r.to_text();
    }

    static IndepCertificate parse(const std::string& text) {
        Record r = Record::parse(text);
        if (r.kind() != "independent-set") throw std::invalid_argument("certificate: not an independent-set record");
        IndepCertificate c;
        c.graph_descriptor = r.get("graph");
        c.construction = r.get("construction");
        c.size = std::stoull(r.get("size"));
        c.verified = r.get("verified") == "true";
        c.verify_mode = r.get("verify_mode");
        c.absolute_free = r.get("absolute_free") == "true";
        if (auto v = r.find("vertices")) c.vertices = split_ids(*v);
        if (auto v = r.find("formula")) c.formula = *v;
        if (auto v = r.find("provider")) c.provider_log = *v;
        if (auto v = r.find("notes")) c.notes = *v;
        return c;
    }
};

namespace detail {

/// exhaustive pairwise independence scan against an adjacency oracle
template <typename Adj>
bool pairwise_independent(const std::vector<uint32_t>& ids, Adj&& adjacent, std::string* witness = nullptr) {
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            if (adjacent(ids[i], ids[j])) {
                if (witness)
                    *witness = "edge inside set: " + std::to_string(ids[i]) + "," + std::to_string(ids[j]);
                return false;
            }
    return true;
}

}  // namespace detail

/// I = { (x, y + z*mu) : x,y in F_q, z in F_q^+ } inside G_f over F_{q^2},
/// for planar f with all coefficients in the subfield F_q.  mu is the field
/// generator (it lies outside F_q since its order exceeds q-1).
inline IndepCertificate construct_thm1(std::shared_ptr<const FieldCtx> ctx, const std::vector<uint32_t>& f) {
    const FieldCtx& F = *ctx;
    if (F.n() % 2 != 0) throw std::invalid_argument("construct_thm1: field must have square order q^2");
    uint32_t half = F.n() / 2;
    for (uint32_t c : f)
        if (!F.in_subfield(c, half))
            throw std::invalid_argument("construct_thm1: coefficient " + std::to_string(c) +
                                        " lies outside the subfield F_q");
    if (auto w = planar_witness(F, f))
        throw std::invalid_argument("construct_thm1: polynomial is not planar (witness a=" +
                                    std::to_string(*w) + ")");

    GfView gf(ctx, f);
    uint32_t mu = F.generator();
    auto sub = F.subfield(half);
    auto sp = sign_partition_of(F, sub);
    uint64_t q = sub.size();

    IndepCertificate cert;
    cert.graph_descriptor = gf.descriptor();
    cert.construction = "thm1";
    cert.plane_order = F.q();
    cert.notes = "mu=generator(" + std::to_string(mu) + ")";
    for (uint32_t x : sub)
        for (uint32_t y : sub)
            for (uint32_t z : sp.plus) cert.vertices.push_back(gf.affine_id(x, F.add(y, F.mul(z, mu))));
    std::sort(cert.vertices.begin(), cert.vertices.end());
    cert.size = cert.vertices.size();
    cert.formula = "q^2*(q-1)/2 = " + std::to_string(q * q * (q - 1) / 2) + " at q=" + std::to_string(q);
    if (cert.size != q * q * (q - 1) / 2) throw std::runtime_error("construct_thm1: size formula violated");

    std::string witness;
    cert.verified = detail::pairwise_independent(
        cert.vertices, [&gf](uint32_t a, uint32_t b) { return gf.adjacent(a, b); }, &witness);
    cert.verify_mode = "exhaustive-pairwise";
    if (!cert.verified) cert.notes += " FAILED:" + witness;
    cert.absolute_free = true;
    for (uint32_t v : cert.vertices)
        if (gf.loop(v)) cert.absolute_free = false;
    return cert;
}

/// I = { (x1 + l*x2, y1 + l*y2) : x1,y1 in F_{p^n}, x2 a nonzero square,
/// y2 in F_q } in the polarity graph of the section3 plane (base order
/// q = p^{2n}).
inline IndepCertificate construct_thm2(std::shared_ptr<const Plane> plane) {
    if (plane->kind != PlaneKind::pi_d || plane->ring->kind() != DivisionRing::Kind::section3)
        throw std::invalid_argument("construct_thm2: plane was not coordinatized by the section3 ring");
    const DivisionRing& D = *plane->ring;
    const FieldCtx& F = D.base();
    uint32_t half = F.n() / 2;
    auto pol = polarity_pi_d(plane);

    auto sub = F.subfield(half);
    std::vector<uint32_t> squares;
    for (uint32_t x = 1; x < F.q(); ++x)
        if (classify_square(F, x) == SquareClass::square) squares.push_back(x);

    IndepCertificate cert;
    cert.graph_descriptor = "graph{polarity " + pol.descriptor() + "}";
    cert.construction = "thm2";
    cert.plane_order = plane->order;
    uint64_t q = F.q();
    for (uint32_t x1 : sub)
        for (uint32_t x2 : squares)
            for (uint32_t y1 : sub)
                for (uint32_t y2 = 0; y2 < F.q(); ++y2)
                    cert.vertices.push_back(plane->affine_id(D.pack(x1, x2), D.pack(y1, y2)));
    std::sort(cert.vertices.begin(), cert.vertices.end());
    cert.size = cert.vertices.size();
    cert.formula = "q^2*(q-1)/2 = " + std::to_string(q * q * (q - 1) / 2) + " at q=" + std::to_string(q) +
                   "; plane-order form Q*(sqrt(Q)-1)/2 at Q=" + std::to_string(plane->order);
    if (cert.size != q * q * (q - 1) / 2) throw std::runtime_error("construct_thm2: size formula violated");

    auto adjacent = [&](uint32_t u, uint32_t v) { return plane->incident(u, pol.point_to_line[v]); };
    std::string witness;
    cert.verified = detail::pairwise_independent(cert.vertices, adjacent, &witness);
    cert.verify_mode = "exhaustive-pairwise";
    if (!cert.verified) cert.notes = "FAILED:" + witness;
    cert.absolute_free = true;
    for (uint32_t v : cert.vertices)
        if (plane->incident(v, pol.point_to_line[v])) cert.absolute_free = false;
    return cert;
}

// --- exact oracle ------------------------------------------------------------

struct MisResult {
    uint32_t alpha = 0;
    std::vector<uint32_t> witness;
    uint64_t nodes = 0;
};

namespace detail {

class MisSolver {
  public:
    explicit MisSolver(const DenseGraph& g) : g_(g), n_(g.n()), words_((n_ + 63) / 64) {}

    MisResult run() {
        std::vector<uint64_t> P(words_, 0);
        for (uint32_t v = 0; v < n_; ++v) P[v >> 6] |= 1ULL << (v & 63);
        cur_.clear();
        best_ = {};
        recurse(P);
        MisResult r;
        r.alpha = static_cast<uint32_t>(best_.size());
        r.witness = best_;
        std::sort(r.witness.begin(), r.witness.end());
        r.nodes = nodes_;
        return r;
    }

  private:
    uint32_t popcount(const std::vector<uint64_t>& s) const {
        uint32_t c = 0;
        for (uint64_t w : s) c += static_cast<uint32_t>(__builtin_popcountll(w));
        return c;
    }

    bool test(const std::vector<uint64_t>& s, uint32_t v) const { return s[v >> 6] >> (v & 63) & 1; }

    uint32_t degree_in(const std::vector<uint64_t>& s, uint32_t v) const {
        uint32_t c = 0;
        const uint64_t* r = g_.row(v);
        for (uint32_t w = 0; w < words_; ++w) c += static_cast<uint32_t>(__builtin_popcountll(r[w] & s[w]));
        return c;
    }

    void take(std::vector<uint64_t>& s, uint32_t v) {
        cur_.push_back(v);
        const uint64_t* r = g_.row(v);
        for (uint32_t w = 0; w < words_; ++w) s[w] &= ~r[w];
        s[v >> 6] &= ~(1ULL << (v & 63));
    }

    /// greedy clique cover of the candidate set; the cover size bounds the
    /// independence number of the induced subgraph from above
    uint32_t clique_cover_bound(const std::vector<uint64_t>& s) const {
        uint32_t cliques = 0;
        thread_local std::vector<std::vector<uint64_t>> members;  // clique -> common-neighborhood mask
        members.clear();
        for (uint32_t v = 0; v < n_; ++v) {
            if (!test(s, v)) continue;
            bool placed = false;
            for (auto& mask : members) {
                if (test(mask, v)) {
                    const uint64_t* r = g_.row(v);
                    for (uint32_t w = 0; w < words_; ++w) mask[w] &= r[w];
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                members.emplace_back(g_.row(v), g_.row(v) + words_);
                ++cliques;
            }
        }
        return cliques;
    }

    void recurse(std::vector<uint64_t> P) {
        ++nodes_;
        // forced picks: vertices with at most one candidate neighbor
        for (bool changed = true; changed;) {
            changed = false;
            for (uint32_t v = 0; v < n_; ++v) {
                if (!test(P, v)) continue;
                if (degree_in(P, v) <= 1) {
                    take(P, v);
                    changed = true;
                }
            }
        }
        if (popcount(P) == 0) {
            if (cur_.size() > best_.size()) best_ = cur_;
            return;
        }
        if (cur_.size() + clique_cover_bound(P) <= best_.size()) return;
        // branch on the candidate of maximum degree, smallest id on ties
        uint32_t pick = UINT32_MAX, pick_deg = 0;
        for (uint32_t v = 0; v < n_; ++v) {
            if (!test(P, v)) continue;
            uint32_t d = degree_in(P, v);
            if (pick == UINT32_MAX || d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        size_t mark = cur_.size();
        {
            auto Pin = P;
            take(Pin, pick);
            recurse(std::move(Pin));
            cur_.resize(mark);
        }
        P[pick >> 6] &= ~(1ULL << (pick & 63));
        recurse(std::move(P));
        cur_.resize(mark);
    }

    const DenseGraph& g_;
    uint32_t n_, words_;
    std::vector<uint32_t> cur_, best_;
    uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exact maximum independent set by branch and bound with greedy clique-cover
/// pruning.  Deterministic: branching follows canonical vertex order.
inline MisResult max_independent_exact_raw(const DenseGraph& g, uint32_t limit = 200) {
    if (g.n() > limit)
        throw std::invalid_argument("max_independent_exact: " + std::to_string(g.n()) +
                                    " vertices exceed the oracle limit " + std::to_string(limit) +
                                    " (use the greedy fallback)");
    return detail::MisSolver(g).run();
}

inline IndepCertificate max_independent_exact(const DenseGraph& g, uint32_t limit = 200) {
    auto res = max_independent_exact_raw(g, limit);
    IndepCertificate cert;
    cert.graph_descriptor = g.descriptor();
    cert.construction = "oracle";
    cert.size = res.alpha;
    cert.vertices = res.witness;
    cert.plane_order = g.order_q();
    std::string witness;
    cert.verified = detail::pairwise_independent(
        cert.vertices, [&g](uint32_t a, uint32_t b) { return g.adjacent(a, b); }, &witness);
    cert.verify_mode = "exhaustive-pairwise";
    cert.absolute_free = true;
    for (uint32_t v : cert.vertices)
        if (g.loop(v)) cert.absolute_free = false;
    cert.notes = "bb_nodes=" + std::to_string(res.nodes);
    return cert;
}

/// deterministic greedy: repeatedly take a minimum-remaining-degree vertex
/// (smallest id on ties) and delete its closed neighborhood
inline std::vector<uint32_t> greedy_independent_set(const DenseGraph& g) {
    uint32_t n = g.n();
    std::vector<uint8_t> alive(n, 1);
    std::vector<uint32_t> out;
    uint32_t remaining = n;
    while (remaining > 0) {
        uint32_t pick = UINT32_MAX, pick_deg = 0;
        for (uint32_t v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            uint32_t d = 0;
            g.for_each_neighbor(v, [&](uint32_t u) { d += alive[u]; });
            if (pick == UINT32_MAX || d < pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        out.push_back(pick);
        alive[pick] = 0;
        --remaining;
        g.for_each_neighbor(pick, [&](uint32_t u) {
            if (alive[u]) {
                alive[u] = 0;
                --remaining;
            }
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- the square-order pipeline (slices of U_q^*) ------------------------------

enum class InnerProvider { auto_select, oracle, thm1_style, greedy };

inline const char* provider_name(InnerProvider p) {
    switch (p) {
        case InnerProvider::oracle: return "oracle";
        case InnerProvider::thm1_style: return "thm1-style";
        case InnerProvider::greedy: return "greedy";
        default: return "auto";
    }
}

/// J = absolute points of U_q: the Hermitian zero set, independent of size
/// q^(3/2) + 1.
inline IndepCertificate unitary_absolute_set(std::shared_ptr<const FieldCtx> ctx) {
    const FieldCtx& F = *ctx;
    if (F.n() % 2 != 0) throw std::invalid_argument("unitary_absolute_set: field order must be a square");
    if (F.q() > 1024) throw std::invalid_argument("unitary_absolute_set: q over the desk-scale limit 1024");
    uint32_t half = F.n() / 2;
    uint32_t n = F.q() * F.q() + F.q() + 1;

    IndepCertificate cert;
    cert.graph_descriptor = "graph{uq " + F.descriptor() + "}";
    cert.construction = "absolute";
    cert.plane_order = F.q();
    for (uint32_t id = 0; id < n; ++id) {
        auto t = pg2_triple_of(F.q(), id);
        uint32_t s = 0;
        for (int i = 0; i < 3; ++i) s = F.add(s, F.mul(t[i], F.frob(t[i], half)));
        if (s == 0) cert.vertices.push_back(id);
    }
    cert.size = cert.vertices.size();
    uint64_t root = isqrt_u64(F.q());
    cert.formula = "q^(3/2)+1 = " + std::to_string(root * root * root + 1);
    if (cert.size != root * root * root + 1) throw std::runtime_error("unitary_absolute_set: count violated");

    auto adjacent = [&](uint32_t a, uint32_t b) {
        auto x = pg2_triple_of(F.q(), a), y = pg2_triple_of(F.q(), b);
        uint32_t s = 0;
        for (int i = 0; i < 3; ++i) s = F.add(s, F.mul(x[i], F.frob(y[i], half)));
        return s == 0;
    };
    std::string witness;
    cert.verified = detail::pairwise_independent(cert.vertices, adjacent, &witness);
    cert.verify_mode = "exhaustive-pairwise";
    cert.absolute_free = false;  // the set is exactly the absolute points
    return cert;
}

namespace detail {

/// slice model: vertices (a,b) over the subfield, edges b1 + b2 = a1*a2,
/// loops 2b = a^2; index (a,b) -> ia*s + ib in subfield enumeration order
inline DenseGraph build_slice_graph(const FieldCtx& F, const std::vector<uint32_t>& sub) {
    uint32_t s = static_cast<uint32_t>(sub.size());
    DenseGraph g(s * s, "graph{uq-star-slice q=" + std::to_string(F.q()) + "}");
    for (uint32_t i = 0; i < s * s; ++i) {
        uint32_t a1 = sub[i / s], b1 = sub[i % s];
        if (F.add(b1, b1) == F.mul(a1, a1)) g.set_loop(i);
        for (uint32_t j = i + 1; j < s * s; ++j) {
            uint32_t a2 = sub[j / s], b2 = sub[j % s];
            if (F.add(b1, b2) == F.mul(a1, a2)) g.add_edge(i, j);
        }
    }
    return g;
}

/// slice independent set through the isomorphism with the affine graph of
/// f = (1/2)X^2 over F_sqrt(q); needs sqrt(q) to be a square itself
inline std::vector<uint32_t> thm1_style_slice_set(const FieldCtx& F, const std::vector<uint32_t>& sub) {
    // sub is F_sqrt(q); its own square root subfield F_r must exist
    uint32_t half = F.n() / 2;
    if (half % 2 != 0)
        throw std::invalid_argument("thm1-style inner provider needs sqrt(q) to be an even prime power");
    auto subr = F.subfield(half / 2);
    uint32_t s = static_cast<uint32_t>(sub.size());
    // generator of the F_sqrt(q) multiplicative group, outside F_r
    uint32_t ghat = F.theta_pow((F.q() - 1) / (s - 1));
    auto spr = sign_partition_of(F, subr);
    uint32_t inv2 = F.inv(F.from_int(2));
    std::vector<uint32_t> idx_of(F.q(), UINT32_MAX);
    for (uint32_t i = 0; i < s; ++i) idx_of[sub[i]] = i;
    std::vector<uint32_t> out;
    for (uint32_t x : subr)
        for (uint32_t y : subr)
            for (uint32_t z : spr.plus) {
                uint32_t b = F.sub(F.add(y, F.mul(z, ghat)), F.mul(inv2, F.mul(x, x)));
                out.push_back(idx_of[x] * s + idx_of[b]);
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Square-order construction: per slice X_c of U_q^*, take an inner
/// independent set, drop the absolute points (2b = a^2), and union across
/// slices.  The union is re-verified pairwise in U_q^* and is absolute-free.
inline IndepCertificate construct_thm3(std::shared_ptr<const FieldCtx> ctx,
                                       InnerProvider provider = InnerProvider::auto_select,
                                       uint32_t oracle_limit = 200) {
    const FieldCtx& F = *ctx;
    if (F.n() % 2 != 0) throw std::invalid_argument("construct_thm3: q must be an even power of an odd prime");
    if (F.p() == 2) throw std::invalid_argument("construct_thm3: q must be an even power of an odd prime");
    if (F.q() > 4096) throw std::invalid_argument("construct_thm3: q over the desk-scale limit 4096");
    uint32_t half = F.n() / 2;
    auto sub = F.subfield(half);
    uint32_t s = static_cast<uint32_t>(sub.size());

    // mu = theta^((sqrt q + 1)/2) satisfies mu^sqrt(q) + mu = 0 and lies
    // outside the subfield; both facts are re-verified here
    uint32_t mu = F.theta_pow((s + 1) / 2);
    if (F.add(F.frob(mu, half), mu) != 0) throw std::runtime_error("construct_thm3: mu trace check failed");
    if (F.in_subfield(mu, half)) throw std::runtime_error("construct_thm3: mu lies in the subfield");

    InnerProvider effective = provider;
    if (provider == InnerProvider::auto_select) {
        if (F.q() <= oracle_limit) effective = InnerProvider::oracle;
        else if (half % 2 == 0) effective = InnerProvider::thm1_style;
        else effective = InnerProvider::greedy;
    }

    auto slice = detail::build_slice_graph(F, sub);
    IndepCertificate cert;
    cert.graph_descriptor = "graph{uq-star " + F.descriptor() + "}";
    cert.construction = "thm3";
    cert.plane_order = F.q();
    cert.notes = "mu=theta^" + std::to_string((s + 1) / 2);

    std::string log = std::string("inner=") + provider_name(effective);
    for (uint32_t ci = 0; ci < s; ++ci) {
        uint32_t c = sub[ci];
        std::vector<uint32_t> inner;
        switch (effective) {
            case InnerProvider::oracle: inner = max_independent_exact_raw(slice, oracle_limit).witness; break;
            case InnerProvider::thm1_style: inner = detail::thm1_style_slice_set(F, sub); break;
            default: inner = greedy_independent_set(slice); break;
        }
        uint32_t removed = 0;
        for (uint32_t idx : inner) {
            uint32_t a = sub[idx / s], b = sub[idx % s];
            if (F.add(b, b) == F.mul(a, a)) {  // absolute point of the slice
                ++removed;
                continue;
            }
            cert.vertices.push_back(F.q() * a + F.add(b, F.mul(c, mu)));  // id of (1, a, b + c*mu)
        }
        if (ci == 0)
            log += " slice_size=" + std::to_string(inner.size()) + " absolutes_removed=" + std::to_string(removed);
    }
    std::sort(cert.vertices.begin(), cert.vertices.end());
    cert.size = cert.vertices.size();
    cert.provider_log = log;
    double ref = 0.19239 * std::pow(static_cast<double>(F.q()), 1.25);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", ref);
    cert.formula = "reference curve 0.19239*q^(5/4) = " + std::string(buf) + " (reported, not asserted)";

    auto adjacent = [&](uint32_t u, uint32_t v) {
        auto x = pg2_triple_of(F.q(), u), y = pg2_triple_of(F.q(), v);
        return uq_star_adjacent(F, x, y);
    };
    std::string witness;
    cert.verified = detail::pairwise_independent(cert.vertices, adjacent, &witness);
    cert.verify_mode = "exhaustive-pairwise";
    if (!cert.verified) cert.notes += " FAILED:" + witness;
    cert.absolute_free = true;
    for (uint32_t v : cert.vertices) {
        auto t = pg2_triple_of(F.q(), v);
        if (uq_star_adjacent(F, t, t)) cert.absolute_free = false;
    }
    return cert;
}

}  // namespace plab

#endif  // POLARITY_LAB_INDEPENDENT_SETS_HPP
