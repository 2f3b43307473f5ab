#include "polarity_lab/graphs.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace plab;

namespace {

DenseGraph er_polarity_graph(uint32_t p, uint32_t n) {
    auto plane = build_pi_f(ff_build(p, n), monomial(2));
    return build_polarity_graph(orthogonal_polarity_pi_f(plane));
}

}  // namespace

TEST(Models, ErTwoIsTheFanoPolarityGraph) {
    auto g = build_er(ff_build(2, 1));
    EXPECT_EQ(g.n(), 7u);
    EXPECT_EQ(g.loop_count(), 3u);
    EXPECT_EQ(g.edge_count(), 9u);
}

TEST(Models, ErThreeCounts) {
    auto g = build_er(ff_build(3, 1));
    EXPECT_EQ(g.n(), 13u);
    EXPECT_EQ(g.loop_count(), 4u);
    EXPECT_EQ(g.edge_count(), 24u);
}

TEST(Models, ErEdgeCountFormula) {
    for (auto [p, n] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        auto g = build_er(ff_build(p, n));
        uint64_t q = g.order_q();
        // brute-force recount straight from the adjacency bits
        uint64_t recount = 0;
        for (uint32_t v = 0; v < g.n(); ++v) recount += g.degree(v);
        EXPECT_EQ(recount % 2, 0u);
        EXPECT_EQ(recount / 2, g.edge_count());
        EXPECT_EQ(g.edge_count(), q * (q + 1) * (q + 1) / 2);
    }
}

TEST(Models, UqCountsAndLoops) {
    auto g9 = build_uq(ff_build(3, 2));
    EXPECT_EQ(g9.n(), 91u);
    EXPECT_EQ(g9.loop_count(), 28u);  // q^(3/2) + 1
    auto g25 = build_uq(ff_build(5, 2));
    EXPECT_EQ(g25.n(), 651u);
    EXPECT_EQ(g25.loop_count(), 126u);
    EXPECT_THROW(build_uq(ff_build(3, 1)), std::invalid_argument);
}

TEST(Models, UqAndUqStarShareAllCounts) {
    auto u = build_uq(ff_build(3, 2));
    auto us = build_uq_star(ff_build(3, 2));
    EXPECT_EQ(u.n(), us.n());
    EXPECT_EQ(u.edge_count(), us.edge_count());
    EXPECT_EQ(u.loop_count(), us.loop_count());
}

TEST(PolarityGraphs, Section3PlaneGraph) {
    auto ring = build_division_ring(DivisionRing::Kind::section3, ff_build(3, 2));
    auto pol = polarity_pi_d(build_coordinatized_plane(ring));
    auto g = build_polarity_graph(pol);
    EXPECT_EQ(g.n(), 6643u);
    EXPECT_EQ(g.loop_count(), 244u);
    EXPECT_EQ(g.order_q(), 81u);
}

TEST(PolarityGraphs, DegreeLaw) {
    auto g = er_polarity_graph(3, 1);
    for (uint32_t v = 0; v < g.n(); ++v) {
        uint32_t expect = g.loop(v) ? g.order_q() : g.order_q() + 1;
        ASSERT_EQ(g.degree(v), expect);
    }
}

TEST(PolarityGraphs, GfViewMatchesGeometryRoute) {
    // the formula-evaluated view and the plane+polarity construction must
    // agree edge-for-edge and loop-for-loop
    for (auto [p, n] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}, {3, 2}}) {
        auto dense = er_polarity_graph(p, n);
        GfView view(ff_build(p, n), monomial(2));
        ASSERT_EQ(view.n_vertices(), dense.n());
        for (uint32_t u = 0; u < dense.n(); ++u) {
            ASSERT_EQ(view.loop(u), dense.loop(u)) << "vertex " << u;
            for (uint32_t v = 0; v < dense.n(); ++v)
                ASSERT_EQ(view.adjacent(u, v), dense.adjacent(u, v)) << u << "," << v;
        }
    }
}

TEST(PolarityGraphs, GfViewNeighborIterationIsConsistent) {
    GfView view(ff_build(3, 2), monomial(2));
    for (uint32_t u = 0; u < view.n_vertices(); ++u) {
        uint32_t count = 0;
        view.for_each_neighbor(u, [&](uint32_t v) {
            ASSERT_TRUE(view.adjacent(u, v));
            ++count;
        });
        uint32_t expect = view.loop(u) ? view.Q() : view.Q() + 1;
        ASSERT_EQ(count, expect);
    }
}

TEST(Checks, C4FreeOnPolarityGraphs) {
    auto er3 = build_er(ff_build(3, 1));
    EXPECT_TRUE(check_c4_free(er3).pass);
    auto u9 = build_uq(ff_build(3, 2));
    EXPECT_TRUE(check_c4_free(u9).pass);
}

TEST(Checks, PlantedC4IsCaught) {
    auto g = build_er(ff_build(3, 1));
    // pick u,w with a common neighbor z, then v ~ w with v != z, v !~ u;
    // adding the edge (u,v) gives the pair (u,w) two common neighbors
    bool planted = false;
    for (uint32_t u = 0; u < g.n() && !planted; ++u)
        for (uint32_t w = 0; w < g.n() && !planted; ++w) {
            if (u == w) continue;
            uint32_t z = UINT32_MAX;
            for (uint32_t c = 0; c < g.n(); ++c)
                if (g.adjacent(u, c) && g.adjacent(w, c)) z = c;
            if (z == UINT32_MAX) continue;
            for (uint32_t v = 0; v < g.n(); ++v) {
                if (v == u || v == z || v == w) continue;
                if (g.adjacent(w, v) && !g.adjacent(u, v)) {
                    g.add_edge(u, v);
                    planted = true;
                    break;
                }
            }
        }
    ASSERT_TRUE(planted);
    auto cert = check_c4_free(g);
    EXPECT_FALSE(cert.pass);
    EXPECT_FALSE(cert.witness.empty());
}

TEST(Checks, CommonNeighborIdentity) {
    auto er3 = build_er(ff_build(3, 1));
    EXPECT_TRUE(check_nsq_identity(er3).pass);
    auto g5 = er_polarity_graph(5, 1);
    EXPECT_TRUE(check_nsq_identity(g5).pass);
}

TEST(Checks, CommonNeighborIdentityNeedsLoops) {
    auto g = build_er(ff_build(3, 1));
    for (uint32_t v = 0; v < g.n(); ++v) g.clear_loop(v);
    auto cert = check_nsq_identity(g);
    EXPECT_FALSE(cert.pass);
    DenseGraph plain(4, "graph{adhoc}");
    EXPECT_THROW(check_nsq_identity(plain), std::invalid_argument);
}

TEST(Checks, ThreadCountDoesNotChangeOutcome) {
    auto g = build_uq(ff_build(3, 2));
    auto c1 = check_c4_free(g, 1);
    auto c2 = check_c4_free(g, 2);
    EXPECT_EQ(c1.pass, c2.pass);
    EXPECT_EQ(c1.to_text(), c2.to_text());
}

TEST(Iso, ErStarMatchesEr) {
    auto er = build_er(ff_build(3, 1));
    auto er_star = build_er_star(ff_build(3, 1));
    std::vector<uint32_t> d1, d2;
    for (uint32_t v = 0; v < er.n(); ++v) {
        d1.push_back(er.degree(v));
        d2.push_back(er_star.degree(v));
    }
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    EXPECT_EQ(d1, d2);
    EXPECT_EQ(er.edge_count(), er_star.edge_count());
    auto iso = iso_small(er, er_star);
    ASSERT_TRUE(iso.has_value());
    for (uint32_t u = 0; u < er.n(); ++u)
        for (uint32_t v = 0; v < er.n(); ++v)
            ASSERT_EQ(er.adjacent(u, v), er_star.adjacent((*iso)[u], (*iso)[v]));
}

TEST(Iso, UqMatchesUqStar) {
    auto u = build_uq(ff_build(3, 2));
    auto us = build_uq_star(ff_build(3, 2));
    auto iso = iso_small(u, us);
    ASSERT_TRUE(iso.has_value());
    for (uint32_t a = 0; a < u.n(); ++a)
        for (uint32_t b = a + 1; b < u.n(); ++b)
            ASSERT_EQ(u.adjacent(a, b), us.adjacent((*iso)[a], (*iso)[b]));
}

TEST(Iso, EdgeRemovalBreaksIsomorphism) {
    auto a = build_er(ff_build(3, 1));
    auto b = build_er(ff_build(3, 1));
    uint32_t u = 0, v = 0;
    for (u = 0; u < b.n(); ++u) {
        bool done = false;
        for (v = u + 1; v < b.n(); ++v)
            if (b.adjacent(u, v)) {
                done = true;
                break;
            }
        if (done) break;
    }
    b.remove_edge(u, v);
    EXPECT_FALSE(iso_small(a, b).has_value());
}

TEST(Iso, SizeLimit) {
    DenseGraph big(201, "graph{adhoc}");
    DenseGraph small(4, "graph{adhoc}");
    EXPECT_THROW(iso_small(big, big), std::invalid_argument);
    EXPECT_FALSE(iso_small(small, DenseGraph(5, "graph{adhoc}")).has_value());
}

TEST(Dimacs, RoundTrip) {
    auto g = build_er(ff_build(3, 1));
    std::ostringstream os;
    dimacs_write(g, os);
    std::istringstream is(os.str());
    auto h = dimacs_read(is);
    ASSERT_EQ(h.n(), g.n());
    EXPECT_EQ(h.edge_count(), g.edge_count());
    EXPECT_EQ(h.loop_vertices(), g.loop_vertices());
    EXPECT_EQ(h.descriptor(), g.descriptor());
    EXPECT_EQ(h.order_q(), g.order_q());
    for (uint32_t u = 0; u < g.n(); ++u)
        for (uint32_t v = 0; v < g.n(); ++v) ASSERT_EQ(h.adjacent(u, v), g.adjacent(u, v));
}

TEST(Dimacs, RejectsCorruptHeader) {
    std::istringstream bad1("p edge 3 5\ne 1 2\n");
    EXPECT_THROW(dimacs_read(bad1), std::invalid_argument);
    std::istringstream bad2("e 1 2\n");
    EXPECT_THROW(dimacs_read(bad2), std::invalid_argument);
    std::istringstream bad3("p edge 2 1\ne 1 5\n");
    EXPECT_THROW(dimacs_read(bad3), std::invalid_argument);
}

TEST(AGraph, VertexCountAndOriginRow) {
    AGraphView view(ff_build(3, 6), 9);  // admissible (q,d) = (27,9) over GF(729)
    EXPECT_EQ(view.n_vertices(), 531441u);
    uint32_t origin = view.vertex_id(0, 0);
    EXPECT_TRUE(view.loop(origin));
    uint32_t count = 0;
    view.for_each_neighbor(origin, [&](uint32_t v) {
        ASSERT_EQ(view.x_of(v), 0u);  // neighbors of (0,0) all carry y = 0
        ++count;
    });
    EXPECT_EQ(count, 728u);
}

TEST(AGraph, RhoMustBeAPermutation) {
    // x -> x^d + x fails to be injective for d = 3 over GF(9)
    EXPECT_THROW(AGraphView(ff_build(3, 2), 3), std::invalid_argument);
}

TEST(AGraph, TauCarriesEdgesIntoGf) {
    auto ctx = ff_build(3, 6);
    AGraphView view(ctx, 9);
    GfView gf(ctx, monomial(10));
    SplitMix64 rng(0);
    for (int it = 0; it < 1000; ++it) {
        uint32_t id = static_cast<uint32_t>(rng.below(view.n_vertices()));
        uint32_t b = static_cast<uint32_t>(rng.below(view.Q()));
        // construct a neighbor from the defining equation
        const FieldCtx& f = view.field();
        uint32_t a = view.rho_inv(view.s_of(id));
        uint32_t y = f.sub(f.add(f.mul(view.pow_d(a), b), f.mul(a, view.pow_d(b))), view.x_of(id));
        uint32_t other = view.vertex_id(view.rho(b), y);
        auto [u1, v1] = view.tau(id);
        auto [u2, v2] = view.tau(other);
        if (other == id) continue;
        ASSERT_TRUE(view.adjacent(id, other));
        ASSERT_TRUE(gf.adjacent(gf.affine_id(u1, v1), gf.affine_id(u2, v2)));
        // non-edges map to non-edges
        uint32_t w = static_cast<uint32_t>(rng.below(view.n_vertices()));
        if (w != id && !view.adjacent(id, w)) {
            auto [u3, v3] = view.tau(w);
            ASSERT_FALSE(gf.adjacent(gf.affine_id(u1, v1), gf.affine_id(u3, v3)));
        }
    }
}

TEST(AGraph, TauInvRoundTrip) {
    auto ctx = ff_build(3, 6);
    AGraphView view(ctx, 9);
    SplitMix64 rng(1);
    for (int it = 0; it < 2000; ++it) {
        uint32_t id = static_cast<uint32_t>(rng.below(view.n_vertices()));
        auto [u, v] = view.tau(id);
        ASSERT_EQ(view.tau_inv(u, v), id);
    }
}
