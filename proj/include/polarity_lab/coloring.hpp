#ifndef POLARITY_LAB_COLORING_HPP
#define POLARITY_LAB_COLORING_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "polarity_lab/graphs.hpp"
#include "polarity_lab/independent_sets.hpp"

namespace plab {

/// p odd prime, q = p^n, d = p^s with s < 2n and 2n/s an odd integer.
struct AdmissiblePair {
    uint32_t p = 0, n = 0, s = 0;
    uint64_t q = 0;
    uint32_t d = 0;

    std::string str() const {
        return "p=" + std::to_string(p) + " n=" + std::to_string(n) + " s=" + std::to_string(s);
    }
};

inline AdmissiblePair check_admissible(uint32_t p, uint32_t n, uint32_t s) {
    if (p == 2 || !is_prime_u64(p)) throw std::invalid_argument("admissible pair: p must be an odd prime");
    if (n == 0 || s == 0) throw std::invalid_argument("admissible pair: n and s must be positive");
    if (s >= 2 * n)
        throw std::invalid_argument("admissible pair: requires s < 2n (got s=" + std::to_string(s) +
                                    ", 2n=" + std::to_string(2 * n) + ")");
    if ((2 * n) % s != 0 || ((2 * n) / s) % 2 == 0)
        throw std::invalid_argument("admissible pair: 2n/s must be an odd integer (got 2n=" +
                                    std::to_string(2 * n) + ", s=" + std::to_string(s) + ")");
    AdmissiblePair ap;
    ap.p = p;
    ap.n = n;
    ap.s = s;
    ap.q = 1;
    for (uint32_t i = 0; i < n; ++i) ap.q *= p;
    ap.d = 1;
    for (uint32_t i = 0; i < s; ++i) ap.d *= p;
    return ap;
}

/// mu = theta^(q+1+t) with t = (p^2n - 1)/(p^s - 1); then mu^d = u2*mu with
/// u1 = 0 and u2 = (theta^(q+1))^(d-1) a (d-1)-th power, and
/// mu^(d+1) = w1 + w2*mu over F_q.
struct MuData {
    uint32_t mu = 0, u1 = 0, u2 = 0, w1 = 0, w2 = 0;
    uint64_t t = 0;
};

inline MuData find_mu(const AdmissiblePair& pair, const FieldCtx& F) {
    if (F.p() != pair.p || F.n() != 2 * pair.n)
        throw std::invalid_argument("find_mu: field context must be GF(p^(2n)) for the pair");
    MuData md;
    uint64_t q2 = F.q();
    md.t = (q2 - 1) / (pair.d - 1);
    if ((q2 - 1) % (pair.d - 1) != 0 || md.t % 2 == 0) throw std::runtime_error("find_mu: t is not an odd integer");
    md.mu = F.theta_pow(pair.q + 1 + md.t);
    md.u1 = 0;
    md.u2 = F.pow(F.theta_pow(pair.q + 1), static_cast<int64_t>(pair.d) - 1);
    if (F.in_subfield(md.mu, pair.n)) throw std::runtime_error("find_mu: mu landed in the subfield");
    if (F.pow(md.mu, pair.d) != F.mul(md.u2, md.mu)) throw std::runtime_error("find_mu: mu^d != u2*mu");
    if (!F.in_subfield(md.u2, pair.n)) throw std::runtime_error("find_mu: u2 outside the subfield");
    uint64_t g = std::gcd<uint64_t>(pair.d - 1, q2 - 1);
    if (F.dlog(md.u2) % g != 0) throw std::runtime_error("find_mu: u2 is not a (d-1)-th power");
    // decompose mu^(d+1) = w1 + w2*mu using the conjugate over F_q
    uint32_t v = F.pow(md.mu, static_cast<int64_t>(pair.d) + 1);
    uint32_t vc = F.frob(v, pair.n);
    uint32_t muc = F.frob(md.mu, pair.n);
    md.w2 = F.div(F.sub(v, vc), F.sub(md.mu, muc));
    md.w1 = F.sub(v, F.mul(md.w2, md.mu));
    if (!F.in_subfield(md.w1, pair.n) || !F.in_subfield(md.w2, pair.n))
        throw std::runtime_error("find_mu: w decomposition left the subfield");
    return md;
}

/// Unique solution of X^d + u2*delta^(d-1)*X = xi (u2 a (d-1)-th power,
/// delta != 0): the left side is linear over the prime field, so the
/// equation becomes an n x n system over GF(p).  A singular system signals a
/// violated precondition.
inline uint32_t solve_linearized(const FieldCtx& F, uint32_t u2, uint32_t delta, uint32_t d, uint32_t xi) {
    if (delta == 0) throw std::invalid_argument("solve_linearized: delta must be nonzero");
    if (u2 == 0) throw std::invalid_argument("solve_linearized: u2 must be nonzero");
    const uint32_t c = F.mul(u2, F.pow(delta, static_cast<int64_t>(d) - 1));
    const uint32_t dim = F.n(), p = F.p();

    std::vector<std::vector<uint32_t>> m(dim, std::vector<uint32_t>(dim + 1, 0));
    uint32_t e = 1;
    for (uint32_t j = 0; j < dim; ++j) {
        uint32_t img = F.add(F.pow(e, d), F.mul(c, e));
        auto coords = F.coeffs(img);
        for (uint32_t i = 0; i < dim; ++i) m[i][j] = coords[i];
        e *= p;
    }
    auto rhs = F.coeffs(xi);
    for (uint32_t i = 0; i < dim; ++i) m[i][dim] = rhs[i];

    auto inv_mod_p = [p](uint32_t x) {
        uint32_t r = 1;
        for (uint32_t k = p - 2; k; k >>= 1) {
            if (k & 1) r = static_cast<uint32_t>(static_cast<uint64_t>(r) * x % p);
            x = static_cast<uint32_t>(static_cast<uint64_t>(x) * x % p);
        }
        return r;
    };
    for (uint32_t col = 0; col < dim; ++col) {
        uint32_t piv = col;
        while (piv < dim && m[piv][col] == 0) ++piv;
        if (piv == dim)
            throw std::runtime_error("solve_linearized: singular system (nonzero root of X^d + u2*delta^(d-1)*X)");
        std::swap(m[piv], m[col]);
        uint32_t inv = inv_mod_p(m[col][col]);
        for (uint32_t j = col; j <= dim; ++j)
            m[col][j] = static_cast<uint32_t>(static_cast<uint64_t>(m[col][j]) * inv % p);
        for (uint32_t i = 0; i < dim; ++i) {
            if (i == col || m[i][col] == 0) continue;
            uint32_t f = m[i][col];
            for (uint32_t j = col; j <= dim; ++j)
                m[i][j] = static_cast<uint32_t>((m[i][j] + static_cast<uint64_t>(p - f) * m[col][j]) % p);
        }
    }
    std::vector<uint32_t> digits(dim);
    for (uint32_t i = 0; i < dim; ++i) digits[i] = m[i][dim];
    uint32_t x = F.from_coeffs(digits);
    if (F.add(F.pow(x, d), F.mul(c, x)) != xi) throw std::runtime_error("solve_linearized: residual check failed");
    return x;
}

/// phi_k on the A-graph with k = alpha^d + alpha:
/// (a^d + a, x) -> (a^d + a + k, x + a^d*alpha + a*alpha^d + alpha^(d+1))
inline uint32_t phi_translate(const AGraphView& view, uint32_t alpha, uint32_t id) {
    const FieldCtx& f = view.field();
    uint32_t a = view.rho_inv(view.s_of(id));
    uint32_t shift =
        f.add(f.add(f.mul(view.pow_d(a), alpha), f.mul(a, view.pow_d(alpha))), view.pow_d1(alpha));
    return view.vertex_id(f.add(view.s_of(id), view.rho(alpha)), f.add(view.x_of(id), shift));
}

/// phi_k on the dickson affine part: (X, Y) -> (X + k, Y + k*X + k^2/2),
/// k a base-field scalar
inline std::pair<uint32_t, uint32_t> dickson_phi(const DivisionRing& D, uint32_t k, uint32_t X, uint32_t Y) {
    const FieldCtx& f = D.base();
    uint32_t inv2 = f.inv(f.from_int(2));
    uint32_t kX = D.pack(f.mul(k, D.x_of(X)), f.mul(k, D.y_of(X)));
    uint32_t shift = D.add(kX, D.pack(f.mul(inv2, f.mul(k, k)), 0));
    return {D.add(X, D.pack(k, 0)), D.add(Y, shift)};
}

/// K/X split of the A-graph vertex set: K carries its 2q-coloring
/// (translate index and half-set sign), X is the q^3-element remainder.
struct AffinePartition {
    std::vector<uint16_t> color;      // per A-vertex; kNoColor marks X members
    std::vector<uint32_t> x_vertices;  // sorted
    uint64_t k_count = 0;
    static constexpr uint16_t kNoColor = 0xFFFF;
};

inline AffinePartition build_partition(const AdmissiblePair& pair, const AGraphView& view, const MuData& md) {
    const FieldCtx& F = view.field();
    auto sub = F.subfield(pair.n);
    auto sp = sign_partition_of(F, sub);
    const uint64_t Q = F.q();
    AffinePartition part;
    part.color.assign(static_cast<size_t>(Q) * Q, AffinePartition::kNoColor);

    // K = union over beta of phi_(beta*mu)^d+(beta*mu) applied to
    // J = { (a^d + a, x1 + x2*mu) : a, x1 in F_q, x2 in F_q^* }
    for (uint32_t ib = 0; ib < sub.size(); ++ib) {
        uint32_t beta = sub[ib];
        uint32_t alpha = F.mul(beta, md.mu);
        uint32_t alpha_d = view.pow_d(alpha);
        uint32_t alpha_d1 = view.pow_d1(alpha);
        for (uint32_t a : sub) {
            uint32_t s = view.rho(F.add(a, alpha));
            uint32_t shift = F.add(F.add(F.mul(view.pow_d(a), alpha), F.mul(a, alpha_d)), alpha_d1);
            for (uint32_t x2 : sub) {
                if (x2 == 0) continue;
                uint16_t color = static_cast<uint16_t>(2 * ib + (sp.in_plus(x2) ? 0 : 1));
                uint32_t x2mu_shift = F.add(F.mul(x2, md.mu), shift);
                for (uint32_t x1 : sub) {
                    uint32_t id = view.vertex_id(s, F.add(x1, x2mu_shift));
                    if (part.color[id] != AffinePartition::kNoColor)
                        throw std::runtime_error("build_partition: K parametrization is not injective");
                    part.color[id] = color;
                    ++part.k_count;
                }
            }
        }
    }

    // X = { ((a+beta*mu)^d + (a+beta*mu), t1 + (a^d b + a b^d u2 + b^(d+1) w2) mu) }
    for (uint32_t a : sub)
        for (uint32_t beta : sub) {
            uint32_t s = view.rho(F.add(a, F.mul(beta, md.mu)));
            uint32_t beta_d = view.pow_d(beta);
            uint32_t coef = F.add(F.add(F.mul(view.pow_d(a), beta), F.mul(F.mul(a, beta_d), md.u2)),
                                  F.mul(F.mul(beta_d, beta), md.w2));
            uint32_t mu_part = F.mul(coef, md.mu);
            for (uint32_t t1 : sub) {
                uint32_t id = view.vertex_id(s, F.add(t1, mu_part));
                if (part.color[id] != AffinePartition::kNoColor)
                    throw std::runtime_error("build_partition: X overlaps K");
                part.x_vertices.push_back(id);
            }
        }
    std::sort(part.x_vertices.begin(), part.x_vertices.end());
    if (std::adjacent_find(part.x_vertices.begin(), part.x_vertices.end()) != part.x_vertices.end())
        throw std::runtime_error("build_partition: X parametrization repeats a vertex");

    uint64_t q = sub.size();
    if (part.x_vertices.size() != q * q * q || part.k_count + part.x_vertices.size() != Q * Q)
        throw std::runtime_error("build_partition: partition counts are off");
    return part;
}

namespace detail {

/// deterministic saturation greedy; ties by canonical vertex id.  vertices
/// are indices into `ids`; adjacency is a callback on those indices.
template <typename AdjList>
std::pair<std::vector<uint16_t>, uint32_t> dsatur(uint32_t n, const AdjList& neighbors) {
    std::vector<uint16_t> color(n, 0xFFFF);
    std::vector<uint32_t> sat_count(n, 0);
    std::vector<std::vector<uint8_t>> seen(n);
    uint32_t palette = 0;
    for (uint32_t step = 0; step < n; ++step) {
        uint32_t pick = UINT32_MAX;
        for (uint32_t v = 0; v < n; ++v) {
            if (color[v] != 0xFFFF) continue;
            if (pick == UINT32_MAX || sat_count[v] > sat_count[pick]) pick = v;
        }
        uint16_t c = 0;
        std::vector<uint8_t> used(palette + 1, 0);
        for (uint32_t u : neighbors[pick])
            if (color[u] != 0xFFFF && color[u] < used.size()) used[color[u]] = 1;
        while (c < used.size() && used[c]) ++c;
        color[pick] = c;
        palette = std::max<uint32_t>(palette, c + 1);
        for (uint32_t u : neighbors[pick]) {
            if (color[u] != 0xFFFF) continue;
            if (seen[u].size() <= c) seen[u].resize(c + 1, 0);
            if (!seen[u][c]) {
                seen[u][c] = 1;
                ++sat_count[u];
            }
        }
    }
    return {color, palette};
}

}  // namespace detail

enum class VerifyMode { full, sample };

/// Proper-coloring claim with per-phase palette accounting and the full color
/// map (run-length encoded in vertex-id order).
struct ColoringCertificate {
    std::string graph_descriptor;
    std::string pipeline;  // planar | dickson
    std::string params;
    uint32_t k_palette = 0, x_palette = 0, inf_palette = 3;
    uint32_t total_colors = 0;
    uint32_t x_max_degree = 0;
    std::string chi_lower_bound;
    bool verified = false;
    std::string verify_mode;
    uint64_t seed = 0;
    std::vector<uint16_t> colors;  // per graph vertex id
    std::string notes;

    std::string to_text() const {
        Record r("coloring");
        r.add("graph", graph_descriptor);
        r.add("graph_hash", hex64(fnv1a64(graph_descriptor)));
        r.add("pipeline", pipeline);
        r.add("params", params);
        r.add("k_palette", uint64_t{k_palette});
        r.add("x_palette", uint64_t{x_palette});
        r.add("inf_palette", uint64_t{inf_palette});
        r.add("total_colors", uint64_t{total_colors});
        r.add("x_max_degree", uint64_t{x_max_degree});
        r.add("chi_lower_bound", chi_lower_bound);
        r.add("verified", verified);
        r.add("verify_mode", verify_mode);
        r.add("seed", seed);
        if (!notes.empty()) r.add("notes", notes);
        r.add("colors_rle", rle_encode(colors));
        return r.to_text();
    }

    static ColoringCertificate parse(const std::string& text) {
        Record r = Record::parse(text);
        if (r.kind() != "coloring") throw std::invalid_argument("certificate: not a coloring record");
        ColoringCertificate c;
        c.graph_descriptor = r.get("graph");
        c.pipeline = r.get("pipeline");
        c.params = r.get("params");
        c.k_palette = static_cast<uint32_t>(std::stoul(r.get("k_palette")));
        c.x_palette = static_cast<uint32_t>(std::stoul(r.get("x_palette")));
        c.inf_palette = static_cast<uint32_t>(std::stoul(r.get("inf_palette")));
        c.total_colors = static_cast<uint32_t>(std::stoul(r.get("total_colors")));
        c.x_max_degree = static_cast<uint32_t>(std::stoul(r.get("x_max_degree")));
        c.chi_lower_bound = r.get("chi_lower_bound");
        c.verified = r.get("verified") == "true";
        c.verify_mode = r.get("verify_mode");
        c.seed = std::stoull(r.get("seed"));
        if (auto v = r.find("notes")) c.notes = *v;
        c.colors = rle_decode(r.get("colors_rle"));
        return c;
    }
};

/// Streams every edge of G_f through the formula adjacency and checks the
/// color map; returns pass/fail with the smallest witness edge.
inline CheckCertificate verify_gf_coloring(const GfView& gf, const std::vector<uint16_t>& colors,
                                           VerifyMode mode = VerifyMode::full, uint64_t seed = 0,
                                           unsigned threads = 1) {
    CheckCertificate cert = make_check("proper-coloring", gf.descriptor());
    const FieldCtx& F = gf.field();
    const uint32_t Q = gf.Q();
    if (colors.size() != gf.n_vertices()) throw std::invalid_argument("verify coloring: color map size mismatch");

    if (mode == VerifyMode::sample) {
        cert.mode = "sampled(seed=" + std::to_string(seed) + ",edges=100000)";
        SplitMix64 rng(seed);
        for (uint64_t it = 0; it < 100000 && cert.pass; ++it) {
            uint32_t x = static_cast<uint32_t>(rng.below(Q)), y = static_cast<uint32_t>(rng.below(Q));
            uint32_t x2 = static_cast<uint32_t>(rng.below(Q));
            uint32_t u = gf.affine_id(x, y);
            uint32_t v = gf.affine_id(x2, F.sub(gf.f_table()[F.add(x, x2)], y));
            if (u == v) continue;
            if (colors[u] == colors[v]) {
                cert.pass = false;
                cert.witness = "edge " + std::to_string(u) + "," + std::to_string(v) + " color " +
                               std::to_string(colors[u]);
            }
        }
        return cert;
    }

    cert.mode = "full-stream";
    const auto& ftab = gf.f_table();
    std::vector<std::string> wit(threads <= 1 ? 1 : threads);
    std::vector<uint8_t> bad(wit.size(), 0);
    parallel_chunks(Q, threads, [&](unsigned chunk, uint64_t b, uint64_t e) {
        for (uint32_t x = static_cast<uint32_t>(b); x < e; ++x) {
            for (uint32_t y = 0; y < Q; ++y) {
                uint32_t u = x * Q + y;
                uint16_t cu = colors[u];
                for (uint32_t x2 = 0; x2 < Q; ++x2) {
                    uint32_t y2 = F.sub(ftab[F.add(x, x2)], y);
                    uint32_t v = x2 * Q + y2;
                    if (v <= u) continue;  // each edge once
                    if (colors[v] == cu) {
                        if (!bad[chunk]) {
                            bad[chunk] = 1;
                            wit[chunk] = "affine edge " + std::to_string(u) + "," + std::to_string(v) +
                                         " color " + std::to_string(cu);
                        }
                        return;
                    }
                }
                // the slope neighbor (-x)
                uint32_t sv = gf.slope_id(F.neg(x));
                if (colors[sv] == cu) {
                    if (!bad[chunk]) {
                        bad[chunk] = 1;
                        wit[chunk] = "slope edge " + std::to_string(u) + "," + std::to_string(sv);
                    }
                    return;
                }
            }
        }
    });
    for (size_t i = 0; i < bad.size(); ++i)
        if (bad[i]) {
            cert.pass = false;
            cert.witness = wit[i];
            return cert;
        }
    for (uint32_t m = 0; m < Q && cert.pass; ++m)
        if (colors[gf.slope_id(m)] == colors[gf.infinity_id()]) {
            cert.pass = false;
            cert.witness = "slope " + std::to_string(m) + " collides with the infinity vertex";
        }
    return cert;
}

/// Full chromatic pipeline for G_f with f = X^(d+1) over F_{q^2}:
/// K gets exactly 2q colors, X a fresh saturation-greedy palette (at most 2q
/// by the cross-slice degree bound), slope points and (inf) three more.
inline ColoringCertificate color_graph(const AdmissiblePair& pair, std::shared_ptr<const FieldCtx> ctx,
                                       VerifyMode mode = VerifyMode::full, uint64_t seed = 0,
                                       unsigned threads = 1) {
    const FieldCtx& F = *ctx;
    if (F.p() != pair.p || F.n() != 2 * pair.n)
        throw std::invalid_argument("color_graph: field context must be GF(p^(2n)) for the pair");
    if (pair.q > 34) throw std::invalid_argument("color_graph: q over the desk-scale pipeline limit 34");
    const uint32_t Q = F.q();
    const uint32_t q = static_cast<uint32_t>(pair.q);

    AGraphView view(ctx, pair.d);
    MuData md = find_mu(pair, F);
    AffinePartition part = build_partition(pair, view, md);

    // X adjacency by pair scan of the defining equation
    const uint32_t nx = static_cast<uint32_t>(part.x_vertices.size());
    std::vector<uint32_t> zs(nx), zds(nx), xs(nx);
    for (uint32_t i = 0; i < nx; ++i) {
        uint32_t id = part.x_vertices[i];
        zs[i] = view.rho_inv(view.s_of(id));
        zds[i] = view.pow_d(zs[i]);
        xs[i] = view.x_of(id);
    }
    std::vector<std::vector<uint32_t>> xadj(nx);
    for (uint32_t i = 0; i < nx; ++i)
        for (uint32_t j = i + 1; j < nx; ++j) {
            if (part.x_vertices[i] == part.x_vertices[j]) continue;
            uint32_t lhs = F.add(F.mul(zds[i], zs[j]), F.mul(zs[i], zds[j]));
            if (lhs == F.add(xs[i], xs[j])) {
                xadj[i].push_back(j);
                xadj[j].push_back(i);
            }
        }
    uint32_t xmax = 0;
    for (uint32_t i = 0; i < nx; ++i) xmax = std::max<uint32_t>(xmax, static_cast<uint32_t>(xadj[i].size()));

    auto [xcolor, xpal] = detail::dsatur(nx, xadj);
    if (xpal > 2 * q)
        throw std::runtime_error("color_graph: X palette exceeded 2q, cross-slice degree bound violated");

    // assemble the map over G_f vertex ids
    GfView gf(ctx, monomial(pair.d + 1));
    ColoringCertificate cert;
    cert.graph_descriptor = gf.descriptor();
    cert.pipeline = "planar";
    cert.params = pair.str();
    cert.k_palette = 2 * q;
    cert.x_palette = xpal;
    cert.total_colors = 2 * q + xpal + 3;
    cert.x_max_degree = xmax;
    cert.seed = seed;
    uint64_t chi_num = static_cast<uint64_t>(Q) * Q + Q + 1;
    uint64_t chi_den = static_cast<uint64_t>(Q) * q + q + 1;
    cert.chi_lower_bound = std::to_string(chi_num) + "/" + std::to_string(chi_den) +
                           " (ceil " + std::to_string((chi_num + chi_den - 1) / chi_den) + ")";
    cert.notes = "mu=theta^" + std::to_string(pair.q + 1 + md.t) + " u2=" + std::to_string(md.u2) +
                 " w2=" + std::to_string(md.w2);

    cert.colors.assign(gf.n_vertices(), 0);
    for (uint32_t i = 0; i < nx; ++i) part.color[part.x_vertices[i]] = static_cast<uint16_t>(2 * q + xcolor[i]);
    for (uint32_t u = 0; u < Q; ++u)
        for (uint32_t v = 0; v < Q; ++v) cert.colors[gf.affine_id(u, v)] = part.color[view.tau_inv(u, v)];
    // slope points are pairwise non-adjacent in G_f; two reserved colors keep
    // the three-color budget of the final phase explicit
    uint16_t base = static_cast<uint16_t>(2 * q + xpal);
    for (uint32_t m = 0; m < Q; ++m) cert.colors[gf.slope_id(m)] = base;
    cert.colors[gf.infinity_id()] = static_cast<uint16_t>(base + 2);

    auto check = verify_gf_coloring(gf, cert.colors, mode, seed, threads);
    cert.verified = check.pass;
    cert.verify_mode = check.mode;
    if (!check.pass) cert.notes += " FAILED:" + check.witness;
    return cert;
}

/// Same pipeline on the orthogonal polarity graph of a dickson plane:
/// K from the q translates of J (2q colors), X greedy, 3 colors for the
/// line at infinity; the whole map is verified edge-by-edge on the graph.
inline ColoringCertificate color_dickson(std::shared_ptr<const FieldCtx> base, uint32_t r, uint32_t nonsquare,
                                         VerifyMode mode = VerifyMode::full, uint64_t seed = 0,
                                         unsigned threads = 1) {
    const FieldCtx& Fq = *base;
    const uint32_t q = Fq.q();
    auto ring = build_division_ring(DivisionRing::Kind::dickson, base, nonsquare, r);
    auto plane = build_coordinatized_plane(ring);
    auto pol = orthogonal_polarity_dickson(plane);
    DenseGraph g = build_polarity_graph(pol);
    const DivisionRing& D = *ring;
    const uint32_t nD = D.size();

    auto sp = half_partition(Fq);
    uint32_t inv2 = Fq.inv(Fq.from_int(2));

    std::vector<uint16_t> color(g.n(), 0xFFFF);
    // K: phi_k images of J = { (x2*l, y1 + y2*l) : y2 != 0 }, color (k, sign y2)
    uint64_t k_count = 0;
    for (uint32_t k = 0; k < q; ++k) {
        uint32_t k2half = Fq.mul(inv2, Fq.mul(k, k));
        for (uint32_t x2 = 0; x2 < q; ++x2) {
            uint32_t X = D.pack(k, x2);
            uint32_t x2k = Fq.mul(x2, k);
            for (uint32_t y2 = 1; y2 < q; ++y2) {
                uint16_t c = static_cast<uint16_t>(2 * k + (sp.in_plus(y2) ? 0 : 1));
                for (uint32_t y1 = 0; y1 < q; ++y1) {
                    uint32_t Y = D.pack(Fq.add(y1, k2half), Fq.add(y2, x2k));
                    uint32_t id = plane->affine_id(X, Y);
                    if (color[id] != 0xFFFF) throw std::runtime_error("color_dickson: K overlap");
                    color[id] = c;
                    ++k_count;
                }
            }
        }
    }
    // X = { (s1 + s2*l, t1 + (s2*s1)*l) }
    std::vector<uint32_t> xv;
    for (uint32_t s1 = 0; s1 < q; ++s1)
        for (uint32_t s2 = 0; s2 < q; ++s2) {
            uint32_t X = D.pack(s1, s2);
            uint32_t t2 = Fq.mul(s2, s1);
            for (uint32_t t1 = 0; t1 < q; ++t1) {
                uint32_t id = plane->affine_id(X, D.pack(t1, t2));
                if (color[id] != 0xFFFF) throw std::runtime_error("color_dickson: X overlaps K");
                xv.push_back(id);
            }
        }
    std::sort(xv.begin(), xv.end());
    uint64_t q4 = static_cast<uint64_t>(nD) * nD;
    if (xv.size() != static_cast<uint64_t>(q) * q * q || k_count + xv.size() != q4)
        throw std::runtime_error("color_dickson: partition counts are off");

    std::vector<std::vector<uint32_t>> xadj(xv.size());
    uint32_t xmax = 0;
    for (uint32_t i = 0; i < xv.size(); ++i) {
        for (uint32_t j = i + 1; j < xv.size(); ++j)
            if (g.adjacent(xv[i], xv[j])) {
                xadj[i].push_back(j);
                xadj[j].push_back(i);
            }
    }
    for (auto& lst : xadj) xmax = std::max<uint32_t>(xmax, static_cast<uint32_t>(lst.size()));
    auto [xcolor, xpal] = detail::dsatur(static_cast<uint32_t>(xv.size()), xadj);
    if (xpal > 2 * q) throw std::runtime_error("color_dickson: X palette exceeded 2q");
    for (uint32_t i = 0; i < xv.size(); ++i) color[xv[i]] = static_cast<uint16_t>(2 * q + xcolor[i]);

    uint16_t bbase = static_cast<uint16_t>(2 * q + xpal);
    for (uint32_t m = 0; m < nD; ++m) color[plane->slope_id(m)] = bbase;
    color[plane->infinity_id()] = static_cast<uint16_t>(bbase + 2);

    ColoringCertificate cert;
    cert.graph_descriptor = g.descriptor();
    cert.pipeline = "dickson";
    cert.params = "q=" + std::to_string(q) + " r=" + std::to_string(r) + " a=" + std::to_string(nonsquare);
    cert.k_palette = 2 * q;
    cert.x_palette = xpal;
    cert.total_colors = 2 * q + xpal + 3;
    cert.x_max_degree = xmax;
    cert.seed = seed;
    uint64_t chi_num = q4 + static_cast<uint64_t>(nD) + 1;
    uint64_t chi_den = static_cast<uint64_t>(nD) * q + q + 1;
    cert.chi_lower_bound = std::to_string(chi_num) + "/" + std::to_string(chi_den) + " (ceil " +
                           std::to_string((chi_num + chi_den - 1) / chi_den) + ")";
    cert.colors = color;

    // verify on the materialized graph
    CheckCertificate check = make_check("proper-coloring", g.descriptor());
    if (mode == VerifyMode::sample) {
        check.mode = "sampled(seed=" + std::to_string(seed) + ",edges=100000)";
        SplitMix64 rng(seed);
        for (uint64_t it = 0; it < 100000 && check.pass; ++it) {
            uint32_t u = static_cast<uint32_t>(rng.below(g.n()));
            uint32_t v = static_cast<uint32_t>(rng.below(g.n()));
            if (u == v || !g.adjacent(u, v)) continue;
            if (color[u] == color[v]) {
                check.pass = false;
                check.witness = "edge " + std::to_string(u) + "," + std::to_string(v);
            }
        }
    } else {
        check.mode = "full-stream";
        for (uint32_t u = 0; u < g.n() && check.pass; ++u)
            g.for_each_neighbor(u, [&](uint32_t v) {
                if (v > u && color[u] == color[v] && check.pass) {
                    check.pass = false;
                    check.witness = "edge " + std::to_string(u) + "," + std::to_string(v) + " color " +
                                    std::to_string(color[u]);
                }
            });
    }
    (void)threads;
    cert.verified = check.pass;
    cert.verify_mode = check.mode;
    if (!check.pass) cert.notes = "FAILED:" + check.witness;
    return cert;
}

}  // namespace plab

#endif  // POLARITY_LAB_COLORING_HPP
