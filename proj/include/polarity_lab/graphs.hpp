#ifndef POLARITY_LAB_GRAPHS_HPP
#define POLARITY_LAB_GRAPHS_HPP

#include <array>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "polarity_lab/polarities.hpp"

namespace plab {

/// Loop-aware undirected graph on canonical vertex ids, bitset adjacency.
/// Loops are kept out of the simple edge set; independence and coloring work
/// on the simple graph throughout.
class DenseGraph {
  public:
    static constexpr uint32_t kMaxVertices = 10000;

    DenseGraph() = default;
    DenseGraph(uint32_t n, std::string descriptor)
        : n_(n), adj_(n, n), loops_((n + 63) / 64, 0), descriptor_(std::move(descriptor)) {
        if (n > kMaxVertices) throw std::invalid_argument("dense graph: vertex count over the dense limit");
    }

    uint32_t n() const { return n_; }
    uint64_t edge_count() const { return edges_; }
    const std::string& descriptor() const { return descriptor_; }
    uint64_t hash() const { return fnv1a64(descriptor_); }
    uint32_t order_q() const { return order_q_; }
    void set_order_q(uint32_t q) { order_q_ = q; }

    bool adjacent(uint32_t u, uint32_t v) const { return adj_.get(u, v); }

    void add_edge(uint32_t u, uint32_t v) {
        if (u == v) {
            set_loop(u);
            return;
        }
        if (!adj_.get(u, v)) {
            adj_.set(u, v);
            adj_.set(v, u);
            ++edges_;
        }
    }

    void remove_edge(uint32_t u, uint32_t v) {
        if (u != v && adj_.get(u, v)) {
            adj_.clear(u, v);
            adj_.clear(v, u);
            --edges_;
        }
    }

    void set_loop(uint32_t v) { loops_[v >> 6] |= 1ULL << (v & 63); }
    void clear_loop(uint32_t v) { loops_[v >> 6] &= ~(1ULL << (v & 63)); }
    bool loop(uint32_t v) const { return loops_[v >> 6] >> (v & 63) & 1; }

    uint32_t loop_count() const {
        uint32_t c = 0;
        for (uint64_t w : loops_) c += static_cast<uint32_t>(__builtin_popcountll(w));
        return c;
    }

    std::vector<uint32_t> loop_vertices() const {
        std::vector<uint32_t> out;
        for (uint32_t v = 0; v < n_; ++v)
            if (loop(v)) out.push_back(v);
        return out;
    }

    uint32_t degree(uint32_t v) const { return adj_.row_popcount(v); }
    const uint64_t* row(uint32_t v) const { return adj_.row(v); }
    uint32_t words() const { return adj_.words(); }

    template <typename Fn>
    void for_each_neighbor(uint32_t v, Fn&& fn) const {
        adj_.for_each_in_row(v, std::forward<Fn>(fn));
    }

    std::vector<std::string> labels;  // optional, size n when present

  private:
    uint32_t n_ = 0;
    BitMatrix adj_;
    std::vector<uint64_t> loops_;
    uint64_t edges_ = 0;
    uint32_t order_q_ = 0;
    std::string descriptor_;
};

/// Vertex per plane point, edge {p1,p2} iff p1 lies on the polar line of p2.
/// Loops record the absolute points.  Validates the degree law on build.
inline DenseGraph build_polarity_graph(const Polarity& pol) {
    const Plane& pl = *pol.plane;
    uint32_t n = pl.n_points();
    if (n > DenseGraph::kMaxVertices)
        throw std::invalid_argument("build_polarity_graph: plane too large for the dense representation");
    DenseGraph g(n, "graph{polarity " + pol.descriptor() + "}");
    g.set_order_q(pl.order);
    for (uint32_t p = 0; p < n; ++p)
        for (uint32_t p2 : pl.points_on(pol.point_to_line[p])) g.add_edge(p, p2);
    for (uint32_t p = 0; p < n; ++p) {
        bool abs = pl.incident(p, pol.point_to_line[p]);
        uint32_t expect = abs ? pl.order : pl.order + 1;
        if (g.loop(p) != abs || g.degree(p) != expect)
            throw std::runtime_error("build_polarity_graph: degree law fails at vertex " + std::to_string(p));
    }
    g.labels.reserve(n);
    for (uint32_t p = 0; p < n; ++p) g.labels.push_back(pl.point_label(p));
    return g;
}

namespace detail {

template <typename Adj>
DenseGraph build_projective_model(const FieldCtx& f, Adj&& adj, const std::string& name) {
    uint32_t q = f.q();
    uint32_t n = q * q + q + 1;
    if (n > DenseGraph::kMaxVertices)
        throw std::invalid_argument(name + ": order too large for the dense representation");
    DenseGraph g(n, "graph{" + name + " " + f.descriptor() + "}");
    g.set_order_q(q);
    std::vector<std::array<uint32_t, 3>> pts(n);
    for (uint32_t id = 0; id < n; ++id) pts[id] = pg2_triple_of(q, id);
    for (uint32_t u = 0; u < n; ++u) {
        if (adj(pts[u], pts[u])) g.set_loop(u);
        for (uint32_t v = u + 1; v < n; ++v)
            if (adj(pts[u], pts[v])) g.add_edge(u, v);
    }
    g.labels.reserve(n);
    for (uint32_t id = 0; id < n; ++id)
        g.labels.push_back("(" + std::to_string(pts[id][0]) + ":" + std::to_string(pts[id][1]) + ":" +
                           std::to_string(pts[id][2]) + ")");
    return g;
}

}  // namespace detail

/// ER_q: x0*y0 + x1*y1 + x2*y2 = 0 on the points of PG(2,q)
inline DenseGraph build_er(std::shared_ptr<const FieldCtx> ctx) {
    const FieldCtx& f = *ctx;
    return detail::build_projective_model(
        f,
        [&f](const std::array<uint32_t, 3>& x, const std::array<uint32_t, 3>& y) {
            uint32_t s = 0;
            for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(x[i], y[i]));
            return s == 0;
        },
        "er");
}

/// U_q: x0*y0^s + x1*y1^s + x2*y2^s = 0 with s = sqrt(q); square order only
inline DenseGraph build_uq(std::shared_ptr<const FieldCtx> ctx) {
    const FieldCtx& f = *ctx;
    if (f.n() % 2 != 0) throw std::invalid_argument("build_uq: field order must be a square");
    uint32_t half = f.n() / 2;
    return detail::build_projective_model(
        f,
        [&f, half](const std::array<uint32_t, 3>& x, const std::array<uint32_t, 3>& y) {
            uint32_t s = 0;
            for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(x[i], f.frob(y[i], half)));
            return s == 0;
        },
        "uq");
}

/// U_q^*: x0*y2^s + x2*y0^s = x1*y1^s
inline DenseGraph build_uq_star(std::shared_ptr<const FieldCtx> ctx) {
    const FieldCtx& f = *ctx;
    if (f.n() % 2 != 0) throw std::invalid_argument("build_uq_star: field order must be a square");
    uint32_t half = f.n() / 2;
    return detail::build_projective_model(
        f,
        [&f, half](const std::array<uint32_t, 3>& x, const std::array<uint32_t, 3>& y) {
            uint32_t lhs = f.add(f.mul(x[0], f.frob(y[2], half)), f.mul(x[2], f.frob(y[0], half)));
            return lhs == f.mul(x[1], f.frob(y[1], half));
        },
        "uq-star");
}

/// ER_q^*: x0*y2 - x1*y1 + x2*y0 = 0
inline DenseGraph build_er_star(std::shared_ptr<const FieldCtx> ctx) {
    const FieldCtx& f = *ctx;
    return detail::build_projective_model(
        f,
        [&f](const std::array<uint32_t, 3>& x, const std::array<uint32_t, 3>& y) {
            uint32_t s = f.add(f.mul(x[0], y[2]), f.mul(x[2], y[0]));
            return s == f.mul(x[1], y[1]);
        },
        "er-star");
}

/// Direct adjacency check in U_q^* on normalized point triples; used where the
/// dense graph does not fit.
inline bool uq_star_adjacent(const FieldCtx& f, const std::array<uint32_t, 3>& x,
                             const std::array<uint32_t, 3>& y) {
    uint32_t half = f.n() / 2;
    uint32_t lhs = f.add(f.mul(x[0], f.frob(y[2], half)), f.mul(x[2], f.frob(y[0], half)));
    return lhs == f.mul(x[1], f.frob(y[1], half));
}

/// Formula-evaluated graph on F_{q^2} x F_{q^2}: vertices (a^d + a, x), edges
/// a^d*b + a*b^d = x + y.  Nothing is stored except the per-element tables;
/// neighbor iteration comes from the defining equation.
class AGraphView {
  public:
    AGraphView(std::shared_ptr<const FieldCtx> ctx, uint32_t d) : ctx_(std::move(ctx)), d_(d) {
        const FieldCtx& f = *ctx_;
        uint32_t Q = f.q();
        xd_.resize(Q);
        xd1_.resize(Q);
        rho_.resize(Q);
        rho_inv_.assign(Q, UINT32_MAX);
        for (uint32_t x = 0; x < Q; ++x) {
            xd_[x] = f.pow(x, d_);
            xd1_[x] = f.mul(xd_[x], x);
            rho_[x] = f.add(xd_[x], x);
        }
        for (uint32_t x = 0; x < Q; ++x) {
            if (rho_inv_[rho_[x]] != UINT32_MAX)
                throw std::invalid_argument("a-graph: x -> x^d + x is not a permutation for this (q,d)");
            rho_inv_[rho_[x]] = x;
        }
    }

    const FieldCtx& field() const { return *ctx_; }
    uint32_t d() const { return d_; }
    uint32_t Q() const { return ctx_->q(); }
    uint64_t n_vertices() const { return static_cast<uint64_t>(Q()) * Q(); }

    uint32_t vertex_id(uint32_t s, uint32_t x) const { return s * Q() + x; }
    uint32_t s_of(uint32_t id) const { return id / Q(); }
    uint32_t x_of(uint32_t id) const { return id % Q(); }
    uint32_t rho(uint32_t a) const { return rho_[a]; }
    uint32_t rho_inv(uint32_t s) const { return rho_inv_[s]; }
    uint32_t pow_d(uint32_t a) const { return xd_[a]; }
    uint32_t pow_d1(uint32_t a) const { return xd1_[a]; }

    bool adjacent(uint32_t id1, uint32_t id2) const {
        if (id1 == id2) return false;
        const FieldCtx& f = *ctx_;
        uint32_t a = rho_inv_[s_of(id1)], b = rho_inv_[s_of(id2)];
        uint32_t lhs = f.add(f.mul(xd_[a], b), f.mul(a, xd_[b]));
        return lhs == f.add(x_of(id1), x_of(id2));
    }

    bool loop(uint32_t id) const {
        uint32_t a = rho_inv_[s_of(id)];
        return x_of(id) == xd1_[a];  // 2*a^(d+1) = 2*x in odd characteristic
    }

    template <typename Fn>
    void for_each_neighbor(uint32_t id, Fn&& fn) const {
        const FieldCtx& f = *ctx_;
        uint32_t a = rho_inv_[s_of(id)], x = x_of(id);
        uint32_t ad = xd_[a];
        for (uint32_t b = 0; b < Q(); ++b) {
            uint32_t y = f.sub(f.add(f.mul(ad, b), f.mul(a, xd_[b])), x);
            uint32_t other = vertex_id(rho_[b], y);
            if (other != id) fn(other);
        }
    }

    /// tau((a^d + a, x)) = (a, x + a^(d+1)) onto the affine part of G_f
    std::pair<uint32_t, uint32_t> tau(uint32_t id) const {
        uint32_t a = rho_inv_[s_of(id)];
        return {a, ctx_->add(x_of(id), xd1_[a])};
    }

    uint32_t tau_inv(uint32_t u, uint32_t v) const { return vertex_id(rho_[u], ctx_->sub(v, xd1_[u])); }

    std::string descriptor() const {
        return "graph{a-q2-d d=" + std::to_string(d_) + " " + ctx_->descriptor() + "}";
    }

  private:
    std::shared_ptr<const FieldCtx> ctx_;
    uint32_t d_;
    std::vector<uint32_t> xd_, xd1_, rho_, rho_inv_;
};

/// Formula-evaluated polarity graph of Pi_f over GF(Q): affine ids x*Q + y,
/// then slope ids Q^2 + m, then infinity.
class GfView {
  public:
    GfView(std::shared_ptr<const FieldCtx> ctx, const std::vector<uint32_t>& f_coeffs)
        : ctx_(std::move(ctx)), f_table_(poly_table(*ctx_, f_coeffs)), coeffs_(f_coeffs) {}

    const FieldCtx& field() const { return *ctx_; }
    uint32_t Q() const { return ctx_->q(); }
    uint64_t n_vertices() const { return static_cast<uint64_t>(Q()) * Q() + Q() + 1; }
    const std::vector<uint32_t>& f_table() const { return f_table_; }

    uint32_t affine_id(uint32_t x, uint32_t y) const { return x * Q() + y; }
    uint32_t slope_id(uint32_t m) const { return Q() * Q() + m; }
    uint32_t infinity_id() const { return Q() * Q() + Q(); }

    bool adjacent(uint32_t u, uint32_t v) const {
        if (u == v) return false;
        const FieldCtx& f = *ctx_;
        uint32_t q2 = Q() * Q();
        if (u > v) std::swap(u, v);
        if (v < q2)  // affine-affine
            return f_table_[f.add(u / Q(), v / Q())] == f.add(u % Q(), v % Q());
        if (v == infinity_id()) return u >= q2;        // (inf) ~ every slope point
        if (u >= q2) return false;                     // slope-slope never adjacent
        return (v - q2) == f.neg(u / Q());             // (m) ~ (x,y) iff m = -x
    }

    bool loop(uint32_t u) const {
        const FieldCtx& f = *ctx_;
        uint32_t q2 = Q() * Q();
        if (u < q2) return f_table_[f.add(u / Q(), u / Q())] == f.add(u % Q(), u % Q());
        return u == infinity_id();
    }

    template <typename Fn>
    void for_each_neighbor(uint32_t u, Fn&& fn) const {
        const FieldCtx& f = *ctx_;
        uint32_t q2 = Q() * Q();
        if (u < q2) {
            uint32_t x = u / Q(), y = u % Q();
            for (uint32_t x2 = 0; x2 < Q(); ++x2) {
                uint32_t y2 = f.sub(f_table_[f.add(x, x2)], y);
                uint32_t v = affine_id(x2, y2);
                if (v != u) fn(v);
            }
            fn(slope_id(f.neg(x)));
            return;
        }
        if (u == infinity_id()) {
            for (uint32_t m = 0; m < Q(); ++m) fn(slope_id(m));
            return;
        }
        uint32_t nm = f.neg(u - q2);
        for (uint32_t y = 0; y < Q(); ++y) fn(affine_id(nm, y));
        fn(infinity_id());
    }

    std::string descriptor() const {
        std::string s = "graph{g-f f=";
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(coeffs_[i]);
        }
        return s + " " + ctx_->descriptor() + "}";
    }

  private:
    std::shared_ptr<const FieldCtx> ctx_;
    std::vector<uint32_t> f_table_;
    std::vector<uint32_t> coeffs_;
};

/// C4-freeness as the common-neighbor bound: every vertex pair has at most
/// one common neighbor in the simple graph.
inline CheckCertificate check_c4_free(const DenseGraph& g, unsigned threads = 1) {
    CheckCertificate cert = make_check("c4-free", g.descriptor());
    const uint32_t n = g.n();
    const uint32_t words = g.words();
    std::vector<std::string> witness(threads <= 1 ? 1 : threads);
    std::vector<uint8_t> failed(witness.size(), 0);
    parallel_chunks(n, threads, [&](unsigned chunk, uint64_t b, uint64_t e) {
        for (uint32_t u = static_cast<uint32_t>(b); u < e; ++u) {
            for (uint32_t v = u + 1; v < n; ++v) {
                if (BitMatrix::and_popcount(g.row(u), g.row(v), words) > 1) {
                    if (!failed[chunk]) {
                        failed[chunk] = 1;
                        witness[chunk] = "vertices " + std::to_string(u) + "," + std::to_string(v) +
                                         " share two neighbors (4-cycle)";
                    }
                    return;
                }
            }
        }
    });
    for (size_t i = 0; i < failed.size(); ++i)
        if (failed[i]) {
            cert.pass = false;
            cert.witness = witness[i];
            break;
        }
    cert.detail("vertices", uint64_t{n});
    cert.detail("edges", g.edge_count());
    return cert;
}

/// Common-neighbor identity of the looped adjacency: counting loops, every
/// pair of vertices has q*[u=v] + 1 common neighbors.  This is the exact
/// combinatorial form of the plane-order spectrum statement.
inline CheckCertificate check_nsq_identity(const DenseGraph& g, unsigned threads = 1) {
    if (g.order_q() == 0)
        throw std::invalid_argument("check_nsq_identity: graph lacks plane-order/loop bookkeeping");
    CheckCertificate cert = make_check("common-neighbor-identity", g.descriptor());
    const uint32_t n = g.n();
    const uint32_t q = g.order_q();
    BitMatrix looped(n, n);
    for (uint32_t u = 0; u < n; ++u) {
        const uint64_t* r = g.row(u);
        uint64_t* dst = looped.row(u);
        for (uint32_t w = 0; w < g.words(); ++w) dst[w] = r[w];
        if (g.loop(u)) looped.set(u, u);
    }
    std::vector<std::string> witness(threads <= 1 ? 1 : threads);
    std::vector<uint8_t> failed(witness.size(), 0);
    parallel_chunks(n, threads, [&](unsigned chunk, uint64_t b, uint64_t e) {
        for (uint32_t u = static_cast<uint32_t>(b); u < e; ++u) {
            for (uint32_t v = u; v < n; ++v) {
                uint32_t expect = (u == v) ? q + 1 : 1;
                uint32_t got = BitMatrix::and_popcount(looped.row(u), looped.row(v), looped.words());
                if (got != expect) {
                    if (!failed[chunk]) {
                        failed[chunk] = 1;
                        witness[chunk] = "pair " + std::to_string(u) + "," + std::to_string(v) + " has " +
                                         std::to_string(got) + " common looped neighbors, expected " +
                                         std::to_string(expect);
                    }
                    return;
                }
            }
        }
    });
    for (size_t i = 0; i < failed.size(); ++i)
        if (failed[i]) {
            cert.pass = false;
            cert.witness = witness[i];
            break;
        }
    cert.detail("vertices", uint64_t{n});
    cert.detail("order", uint64_t{q});
    return cert;
}

/// Backtracking isomorphism search with degree and mapped-neighbor pruning.
/// Returns the vertex bijection g1 -> g2, or nullopt when provably
/// non-isomorphic.  Deliberately small-scale: both graphs must have at most
/// 200 vertices.
inline std::optional<std::vector<uint32_t>> iso_small(const DenseGraph& g1, const DenseGraph& g2) {
    constexpr uint32_t kLimit = 200;
    constexpr uint64_t kNodeBudget = 50000000;
    if (g1.n() > kLimit || g2.n() > kLimit) throw std::invalid_argument("iso_small: graph over 200 vertices");
    if (g1.n() != g2.n() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    const uint32_t n = g1.n();
    std::vector<uint32_t> deg1(n), deg2(n);
    for (uint32_t v = 0; v < n; ++v) {
        deg1[v] = g1.degree(v);
        deg2[v] = g2.degree(v);
    }
    {
        auto s1 = deg1, s2 = deg2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    std::vector<uint32_t> map(n, UINT32_MAX), rmap(n, UINT32_MAX), mapped_order;
    mapped_order.reserve(n);
    uint64_t nodes = 0;

    auto pick_next = [&]() -> uint32_t {
        uint32_t best = UINT32_MAX, best_mapped = 0, best_deg = 0;
        for (uint32_t v = 0; v < n; ++v) {
            if (map[v] != UINT32_MAX) continue;
            uint32_t m = 0;
            for (uint32_t u : mapped_order)
                if (g1.adjacent(v, u)) ++m;
            if (best == UINT32_MAX || m > best_mapped || (m == best_mapped && deg1[v] > best_deg)) {
                best = v;
                best_mapped = m;
                best_deg = deg1[v];
            }
        }
        return best;
    };

    std::function<bool()> rec = [&]() -> bool {
        if (mapped_order.size() == n) return true;
        if (++nodes > kNodeBudget) throw std::runtime_error("iso_small: search budget exceeded");
        uint32_t v = pick_next();
        for (uint32_t c = 0; c < n; ++c) {
            if (rmap[c] != UINT32_MAX || deg2[c] != deg1[v]) continue;
            bool ok = true;
            for (uint32_t u : mapped_order)
                if (g1.adjacent(v, u) != g2.adjacent(c, map[u])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map[v] = c;
            rmap[c] = v;
            mapped_order.push_back(v);
            if (rec()) return true;
            mapped_order.pop_back();
            map[v] = UINT32_MAX;
            rmap[c] = UINT32_MAX;
        }
        return false;
    };

    if (!rec()) return std::nullopt;
    return map;
}

// --- DIMACS -----------------------------------------------------------------

/// "p edge n m" with 1-based "e u v" lines; loops are not edges and travel in
/// a comment, as does the provenance descriptor.
inline void dimacs_write(const DenseGraph& g, std::ostream& os) {
    os << "c polarity-lab graph " << g.descriptor() << "\n";
    os << "c hash " << hex64(g.hash()) << "\n";
    if (g.order_q() != 0) os << "c order " << g.order_q() << "\n";
    auto loops = g.loop_vertices();
    if (!loops.empty()) {
        os << "c loops";
        for (uint32_t v : loops) os << ' ' << v + 1;
        os << "\n";
    }
    os << "p edge " << g.n() << ' ' << g.edge_count() << "\n";
    for (uint32_t u = 0; u < g.n(); ++u)
        g.for_each_neighbor(u, [&](uint32_t v) {
            if (v > u) os << "e " << u + 1 << ' ' << v + 1 << "\n";
        });
}

inline DenseGraph dimacs_read(std::istream& is) {
    std::string line, descriptor = "graph{imported}";
    std::vector<uint32_t> loops;
    uint32_t order_q = 0;
    DenseGraph g;
    bool have_p = false;
    uint64_t declared_edges = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') {
            if (line.rfind("c polarity-lab graph ", 0) == 0) descriptor = line.substr(21);
            else if (line.rfind("c order ", 0) == 0) order_q = static_cast<uint32_t>(std::stoul(line.substr(8)));
            else if (line.rfind("c loops", 0) == 0)
                for (uint32_t v : split_ids(line.substr(7))) loops.push_back(v - 1);
            continue;
        }
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string fmt;
            uint32_t n;
            ls >> fmt >> n >> declared_edges;
            if (fmt != "edge") throw std::invalid_argument("dimacs: expected 'p edge'");
            g = DenseGraph(n, descriptor);
            g.set_order_q(order_q);
            for (uint32_t v : loops) g.set_loop(v);
            have_p = true;
        } else if (tag == 'e') {
            if (!have_p) throw std::invalid_argument("dimacs: edge before problem line");
            uint32_t u, v;
            ls >> u >> v;
            if (u == 0 || v == 0 || u > g.n() || v > g.n())
                throw std::invalid_argument("dimacs: vertex id out of range");
            g.add_edge(u - 1, v - 1);
        }
    }
    if (!have_p) throw std::invalid_argument("dimacs: missing problem line");
    if (g.edge_count() != declared_edges)
        throw std::invalid_argument("dimacs: edge count mismatch with header");
    return g;
}

}  // namespace plab

#endif  // POLARITY_LAB_GRAPHS_HPP
