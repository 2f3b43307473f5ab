#ifndef POLARITY_LAB_WORKBENCH_HPP
#define POLARITY_LAB_WORKBENCH_HPP

#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "polarity_lab/coloring.hpp"

namespace plab {

// --- descriptor parsing -------------------------------------------------------

namespace detail {

/// splits "a=1 b={x=2} pg2 c=field{..}" into top-level tokens, respecting
/// braces; tokens are either bare words or key=value
inline std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '{') ++depth;
        if (ch == '}') --depth;
        if (ch == ' ' && depth == 0) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

/// "name{body}" -> body; throws when the wrapper does not match
inline std::string unwrap(const std::string& s, const std::string& name) {
    if (s.rfind(name + "{", 0) != 0 || s.back() != '}')
        throw std::invalid_argument("descriptor: expected " + name + "{...}, got '" + s + "'");
    return s.substr(name.size() + 1, s.size() - name.size() - 2);
}

inline std::map<std::string, std::string> kv_of(const std::vector<std::string>& tokens) {
    std::map<std::string, std::string> kv;
    for (const auto& t : tokens) {
        auto eq = t.find('=');
        if (eq == std::string::npos) kv[t] = "";
        else kv[t.substr(0, eq)] = t.substr(eq + 1);
    }
    return kv;
}

inline std::vector<uint32_t> parse_u32_list(const std::string& s) {
    std::vector<uint32_t> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(static_cast<uint32_t>(std::stoul(cur)));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

}  // namespace detail

/// Rebuilds the deterministic field of a descriptor and cross-checks the
/// recorded modulus and generator, so a certificate can never silently
/// verify against a different field realization.
inline std::shared_ptr<const FieldCtx> rebuild_field(const std::string& desc) {
    auto kv = detail::kv_of(detail::split_top_level(detail::unwrap(desc, "field")));
    auto ctx = ff_build(static_cast<uint32_t>(std::stoul(kv.at("p"))),
                        static_cast<uint32_t>(std::stoul(kv.at("n"))));
    auto mod = detail::parse_u32_list(kv.at("modulus"));
    if (mod != ctx->modulus() || std::stoul(kv.at("generator")) != ctx->generator())
        throw std::invalid_argument("descriptor: field realization mismatch (modulus/generator)");
    return ctx;
}

inline std::shared_ptr<const DivisionRing> rebuild_ring(const std::string& desc) {
    auto tokens = detail::split_top_level(detail::unwrap(desc, "ring"));
    auto kv = detail::kv_of(tokens);
    auto base = rebuild_field(kv.at("base"));
    if (kv.at("kind") == "section3") return build_division_ring(DivisionRing::Kind::section3, base);
    return build_division_ring(DivisionRing::Kind::dickson, base,
                               static_cast<uint32_t>(std::stoul(kv.at("a"))),
                               static_cast<uint32_t>(std::stoul(kv.at("r"))));
}

inline std::shared_ptr<const Plane> rebuild_plane(const std::string& desc) {
    auto tokens = detail::split_top_level(detail::unwrap(desc, "plane"));
    auto kv = detail::kv_of(tokens);
    if (kv.count("pg2")) return build_pg2(rebuild_field(tokens.back()));
    if (kv.count("pi-d")) return build_coordinatized_plane(rebuild_ring(tokens.back()));
    return build_pi_f(rebuild_field(tokens.back()), detail::parse_u32_list(kv.at("f")));
}

inline Polarity rebuild_polarity(const std::string& desc) {
    auto tokens = detail::split_top_level(detail::unwrap(desc, "polarity"));
    const std::string& kind = tokens.at(0);
    if (kind == "unitary-pg2") {
        auto plane_tokens = detail::split_top_level(detail::unwrap(tokens.at(1), "plane"));
        return unitary_polarity_pg2(rebuild_field(plane_tokens.back()));
    }
    auto plane = rebuild_plane(tokens.at(1));
    if (kind == "orthogonal-pi-f") return orthogonal_polarity_pi_f(plane);
    if (kind == "section3") return polarity_pi_d(plane);
    if (kind == "orthogonal-dickson") return orthogonal_polarity_dickson(plane);
    throw std::invalid_argument("descriptor: unknown polarity kind '" + kind + "'");
}

/// Formula adjacency reconstructed from a graph descriptor; covers every
/// graph the workbench can put into a certificate.
struct GraphOracle {
    uint64_t n = 0;
    std::function<bool(uint32_t, uint32_t)> adjacent;
    std::function<bool(uint32_t)> loop;
    // keeps the backing objects alive
    std::shared_ptr<void> backing;
};

inline GraphOracle rebuild_graph_oracle(const std::string& desc) {
    auto tokens = detail::split_top_level(detail::unwrap(desc, "graph"));
    const std::string& kind = tokens.at(0);
    GraphOracle oracle;
    if (kind == "er" || kind == "uq" || kind == "uq-star" || kind == "er-star") {
        auto ctx = rebuild_field(tokens.at(1));
        const FieldCtx& F = *ctx;
        uint32_t half = (kind == "uq" || kind == "uq-star") ? F.n() / 2 : 0;
        oracle.n = static_cast<uint64_t>(F.q()) * F.q() + F.q() + 1;
        auto form = [kind, half](const FieldCtx& f, const std::array<uint32_t, 3>& x,
                                 const std::array<uint32_t, 3>& y) {
            if (kind == "er") {
                uint32_t s = 0;
                for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(x[i], y[i]));
                return s == 0;
            }
            if (kind == "uq") {
                uint32_t s = 0;
                for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(x[i], f.frob(y[i], half)));
                return s == 0;
            }
            if (kind == "uq-star") {
                uint32_t lhs = f.add(f.mul(x[0], f.frob(y[2], half)), f.mul(x[2], f.frob(y[0], half)));
                return lhs == f.mul(x[1], f.frob(y[1], half));
            }
            uint32_t s = f.add(f.mul(x[0], y[2]), f.mul(x[2], y[0]));
            return s == f.mul(x[1], y[1]);
        };
        oracle.adjacent = [ctx, form](uint32_t u, uint32_t v) {
            if (u == v) return false;
            return form(*ctx, pg2_triple_of(ctx->q(), u), pg2_triple_of(ctx->q(), v));
        };
        oracle.loop = [ctx, form](uint32_t u) {
            auto t = pg2_triple_of(ctx->q(), u);
            return form(*ctx, t, t);
        };
        oracle.backing = std::make_shared<std::shared_ptr<const FieldCtx>>(ctx);
        return oracle;
    }
    if (kind == "g-f") {
        auto kv = detail::kv_of(tokens);
        auto view = std::make_shared<GfView>(rebuild_field(tokens.back()), detail::parse_u32_list(kv.at("f")));
        oracle.n = view->n_vertices();
        oracle.adjacent = [view](uint32_t u, uint32_t v) { return view->adjacent(u, v); };
        oracle.loop = [view](uint32_t u) { return view->loop(u); };
        oracle.backing = view;
        return oracle;
    }
    if (kind == "a-q2-d") {
        auto kv = detail::kv_of(tokens);
        auto view = std::make_shared<AGraphView>(rebuild_field(tokens.back()),
                                                 static_cast<uint32_t>(std::stoul(kv.at("d"))));
        oracle.n = view->n_vertices();
        oracle.adjacent = [view](uint32_t u, uint32_t v) { return view->adjacent(u, v); };
        oracle.loop = [view](uint32_t u) { return view->loop(u); };
        oracle.backing = view;
        return oracle;
    }
    if (kind == "polarity") {
        auto pol = std::make_shared<Polarity>(rebuild_polarity(tokens.at(1)));
        oracle.n = pol->plane->n_points();
        oracle.adjacent = [pol](uint32_t u, uint32_t v) {
            if (u == v) return false;
            return pol->plane->incident(u, pol->point_to_line[v]);
        };
        oracle.loop = [pol](uint32_t u) { return pol->plane->incident(u, pol->point_to_line[u]); };
        oracle.backing = pol;
        return oracle;
    }
    throw std::invalid_argument("descriptor: cannot rebuild adjacency for '" + desc +
                                "' (imported graphs need --graph)");
}

// --- prime-power parameter handling ------------------------------------------

struct PrimePower {
    uint32_t p = 0, n = 0;
    uint64_t q = 0;
};

inline PrimePower factor_prime_power(uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    PrimePower pp;
    pp.p = static_cast<uint32_t>(p);
    pp.q = q;
    uint64_t rest = q;
    while (rest > 1) {
        if (rest % p != 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        rest /= p;
        ++pp.n;
    }
    return pp;
}

// --- sweep --------------------------------------------------------------------

/// Evidence table: construction sizes against the spectral bound across q.
inline std::string run_sweep(const std::vector<std::string>& models, const std::vector<uint64_t>& qs,
                             uint32_t oracle_limit = 200) {
    std::ostringstream csv;
    csv << "q,model,construction,size,alpha_exact,hoffman_ceiling,ratio_q32,note\n";
    char ratio_buf[32];
    auto ratio_str = [&](uint64_t size, uint64_t q) {
        double r = static_cast<double>(size) / std::pow(static_cast<double>(q), 1.5);
        std::snprintf(ratio_buf, sizeof(ratio_buf), "%.6f", r);
        return std::string(ratio_buf);
    };
    for (uint64_t q : qs) {
        for (const auto& model : models) {
            try {
                auto pp = factor_prime_power(q);
                auto hb = hoffman_bound(q);
                if (model == "er") {
                    auto g = build_er(ff_build(pp.p, pp.n));
                    std::string alpha = "";
                    if (g.n() <= oracle_limit) alpha = std::to_string(max_independent_exact_raw(g, oracle_limit).alpha);
                    uint64_t size = g.loop_count();  // the absolute points, an independent set
                    csv << q << ",er,absolute-set," << size << "," << alpha << "," << hb.closed_ceiling << ","
                        << ratio_str(size, q) << ",\n";
                } else if (model == "uq-absolute") {
                    if (pp.n % 2 != 0) {
                        csv << q << ",uq-absolute,,,,,," << "skipped: q is not a square\n";
                        continue;
                    }
                    auto cert = unitary_absolute_set(ff_build(pp.p, pp.n));
                    csv << q << ",uq-absolute,absolute-set," << cert.size << ",," << hb.closed_ceiling << ","
                        << ratio_str(cert.size, q) << ",\n";
                } else if (model == "thm1") {
                    auto cert = construct_thm1(ff_build(pp.p, 2 * pp.n), monomial(2));
                    uint64_t Q = q * q;  // plane order of the host graph
                    csv << Q << ",thm1,subfield-coefficients," << cert.size << ",,"
                        << hoffman_bound(Q).closed_ceiling << "," << ratio_str(cert.size, Q) << ",\n";
                } else if (model == "thm3") {
                    if (pp.n % 2 != 0) {
                        csv << q << ",thm3,,,,,," << "skipped: q is not an even power\n";
                        continue;
                    }
                    auto cert = construct_thm3(ff_build(pp.p, pp.n));
                    csv << q << ",thm3,slice-union," << cert.size << ",," << hb.closed_ceiling << ","
                        << ratio_str(cert.size, q) << ",\n";
                } else {
                    csv << q << "," << model << ",,,,,," << "skipped: unknown model\n";
                }
            } catch (const std::exception& e) {
                csv << q << "," << model << ",,,,,," << "skipped: " << e.what() << "\n";
            }
        }
    }
    return csv.str();
}

// --- verify -------------------------------------------------------------------

/// Re-verifies a certificate file against a rebuilt graph (or a DIMACS file).
/// Returns 0 on verified pass, 1 on any failure.
inline int verify_certificate_text(const std::string& text, const std::string& dimacs_path, std::ostream& out) {
    Record header = Record::parse(text);
    if (header.kind() == "independent-set") {
        auto cert = IndepCertificate::parse(text);
        if (cert.vertices.empty() && cert.size != 0) {
            out << "verify: certificate carries only a hash of its vertex list; cannot re-check\n";
            return 1;
        }
        std::function<bool(uint32_t, uint32_t)> adjacent;
        std::function<bool(uint32_t)> loop;
        std::shared_ptr<void> keep;
        if (!dimacs_path.empty()) {
            std::ifstream is(dimacs_path);
            if (!is) throw std::invalid_argument("verify: cannot open " + dimacs_path);
            auto g = std::make_shared<DenseGraph>(dimacs_read(is));
            if (g->descriptor() != cert.graph_descriptor) {
                out << "verify: FAIL graph descriptor mismatch\n";
                return 1;
            }
            adjacent = [g](uint32_t a, uint32_t b) { return g->adjacent(a, b); };
            loop = [g](uint32_t v) { return g->loop(v); };
            keep = g;
        } else {
            auto oracle = rebuild_graph_oracle(cert.graph_descriptor);
            adjacent = oracle.adjacent;
            loop = oracle.loop;
            keep = oracle.backing;
        }
        if (cert.vertices.size() != cert.size) {
            out << "verify: FAIL size field does not match the vertex list\n";
            return 1;
        }
        std::string witness;
        if (!detail::pairwise_independent(cert.vertices, adjacent, &witness)) {
            out << "verify: FAIL " << witness << "\n";
            return 1;
        }
        bool abs_free = true;
        for (uint32_t v : cert.vertices)
            if (loop(v)) abs_free = false;
        if (abs_free != cert.absolute_free) {
            out << "verify: FAIL absolute_free flag does not match the loop set\n";
            return 1;
        }
        out << "verify: PASS independent-set size=" << cert.size << " absolute_free=" << (abs_free ? "true" : "false")
            << "\n";
        return 0;
    }
    if (header.kind() == "coloring") {
        auto cert = ColoringCertificate::parse(text);
        uint32_t palette_cap = cert.k_palette + cert.x_palette + cert.inf_palette;
        for (uint16_t c : cert.colors)
            if (c >= palette_cap) {
                out << "verify: FAIL color outside the declared palette\n";
                return 1;
            }
        if (cert.pipeline == "planar") {
            auto kv = detail::kv_of(detail::split_top_level(cert.params));
            auto pair = check_admissible(static_cast<uint32_t>(std::stoul(kv.at("p"))),
                                         static_cast<uint32_t>(std::stoul(kv.at("n"))),
                                         static_cast<uint32_t>(std::stoul(kv.at("s"))));
            auto ctx = ff_build(pair.p, 2 * pair.n);
            GfView gf(ctx, monomial(pair.d + 1));
            auto check = verify_gf_coloring(gf, cert.colors, VerifyMode::full, 0, 2);
            out << (check.pass ? "verify: PASS" : "verify: FAIL") << " coloring total_colors="
                << cert.total_colors << (check.pass ? "" : " " + check.witness) << "\n";
            return check.pass ? 0 : 1;
        }
        if (cert.pipeline == "dickson") {
            auto kv = detail::kv_of(detail::split_top_level(cert.params));
            auto pp = factor_prime_power(std::stoull(kv.at("q")));
            auto base = ff_build(pp.p, pp.n);
            auto ring = build_division_ring(DivisionRing::Kind::dickson, base,
                                            static_cast<uint32_t>(std::stoul(kv.at("a"))),
                                            static_cast<uint32_t>(std::stoul(kv.at("r"))));
            auto g = build_polarity_graph(orthogonal_polarity_dickson(build_coordinatized_plane(ring)));
            if (cert.colors.size() != g.n()) {
                out << "verify: FAIL color map size mismatch\n";
                return 1;
            }
            for (uint32_t u = 0; u < g.n(); ++u) {
                bool ok = true;
                g.for_each_neighbor(u, [&](uint32_t v) {
                    if (v > u && cert.colors[u] == cert.colors[v]) ok = false;
                });
                if (!ok) {
                    out << "verify: FAIL monochromatic edge at vertex " << u << "\n";
                    return 1;
                }
            }
            out << "verify: PASS coloring total_colors=" << cert.total_colors << "\n";
            return 0;
        }
        out << "verify: FAIL unknown pipeline '" << cert.pipeline << "'\n";
        return 1;
    }
    if (header.kind() == "absolute-report") {
        auto pol = rebuild_polarity(header.get("target"));
        auto rep = absolute_points(pol);
        bool ok = std::to_string(rep.count) == header.get("count") &&
                  AbsoluteReport::classification_name(rep.classification) == header.get("classification") &&
                  hex64(fnv1a64(rep.points)) == header.get("points_hash");
        out << (ok ? "verify: PASS" : "verify: FAIL") << " absolute-report count=" << rep.count << "\n";
        return ok ? 0 : 1;
    }
    out << "verify: FAIL unsupported certificate kind '" << header.kind() << "'\n";
    return 1;
}

}  // namespace plab

#endif  // POLARITY_LAB_WORKBENCH_HPP
