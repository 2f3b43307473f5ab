#include "polarity_lab/coloring.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace plab;

namespace {

uint32_t smallest_nonsquare(const FieldCtx& f) {
    for (uint32_t c = 1; c < f.q(); ++c)
        if (!is_square(f, c)) return c;
    throw std::logic_error("no non-square");
}

}  // namespace

TEST(Admissible, Definition) {
    auto ap = check_admissible(3, 3, 2);
    EXPECT_EQ(ap.q, 27u);
    EXPECT_EQ(ap.d, 9u);
    EXPECT_THROW(check_admissible(3, 1, 1), std::invalid_argument);  // 2n/s = 2 is even
    auto big = check_admissible(5, 3, 2);
    EXPECT_EQ(big.q, 125u);
    EXPECT_EQ(big.d, 25u);
    EXPECT_THROW(check_admissible(2, 3, 2), std::invalid_argument);
    EXPECT_THROW(check_admissible(3, 1, 2), std::invalid_argument);  // s = 2n
    EXPECT_THROW(check_admissible(3, 2, 3), std::invalid_argument);  // s does not divide 2n
}

TEST(Mu, LemmaDataAtQ27) {
    auto pair = check_admissible(3, 3, 2);
    auto ctx = ff_build(3, 6);
    auto md = find_mu(pair, *ctx);
    EXPECT_EQ(md.t, 91u);  // (3^6-1)/(3^2-1)
    EXPECT_EQ(md.t % 2, 1u);
    EXPECT_EQ(md.u1, 0u);
    EXPECT_EQ(ctx->dlog(md.mu), (pair.q + 1 + md.t) % (ctx->q() - 1));
    // mu^d = u2*mu by direct arithmetic
    EXPECT_EQ(ctx->pow(md.mu, pair.d), ctx->mul(md.u2, md.mu));
    EXPECT_FALSE(ctx->in_subfield(md.mu, 3));
    // mu^(d+1) decomposes back
    EXPECT_EQ(ctx->pow(md.mu, pair.d + 1), ctx->add(md.w1, ctx->mul(md.w2, md.mu)));
}

TEST(Mu, U2IsADMinusOnePowerByExhaustion) {
    auto pair = check_admissible(3, 3, 2);
    auto ctx = ff_build(3, 6);
    auto md = find_mu(pair, *ctx);
    std::set<uint32_t> powers;
    for (uint32_t x = 1; x < ctx->q(); ++x) powers.insert(ctx->pow(x, pair.d - 1));
    EXPECT_TRUE(powers.count(md.u2));
}

TEST(Mu, WrongContextRejected) {
    auto pair = check_admissible(3, 3, 2);
    EXPECT_THROW(find_mu(pair, *ff_build(3, 3)), std::invalid_argument);
    EXPECT_THROW(find_mu(pair, *ff_build(5, 6)), std::invalid_argument);
}

TEST(Linearized, ZeroMapsToZero) {
    auto pair = check_admissible(3, 3, 2);
    auto ctx = ff_build(3, 6);
    auto md = find_mu(pair, *ctx);
    EXPECT_EQ(solve_linearized(*ctx, md.u2, 1, pair.d, 0), 0u);
}

TEST(Linearized, SeededInstancesHaveUniqueSolutions) {
    auto pair = check_admissible(3, 3, 2);
    auto ctx = ff_build(3, 6);
    const FieldCtx& F = *ctx;
    auto md = find_mu(pair, F);
    SplitMix64 rng(0);
    for (int it = 0; it < 100; ++it) {
        uint32_t delta = 1 + static_cast<uint32_t>(rng.below(F.q() - 1));
        uint32_t xi = static_cast<uint32_t>(rng.below(F.q()));
        uint32_t x = solve_linearized(F, md.u2, delta, pair.d, xi);
        uint32_t c = F.mul(md.u2, F.pow(delta, pair.d - 1));
        ASSERT_EQ(F.add(F.pow(x, pair.d), F.mul(c, x)), xi);
        // exhaustive uniqueness scan over the whole field
        uint32_t solutions = 0;
        for (uint32_t cand = 0; cand < F.q(); ++cand)
            if (F.add(F.pow(cand, pair.d), F.mul(c, cand)) == xi) ++solutions;
        ASSERT_EQ(solutions, 1u);
    }
}

TEST(Linearized, NonPowerCoefficientIsSingular) {
    auto pair = check_admissible(3, 3, 2);
    auto ctx = ff_build(3, 6);
    const FieldCtx& F = *ctx;
    // with u2 = -theta^(d-1) and delta = 1, X = theta is a nonzero root of
    // X^d + u2*X, so the map cannot be invertible
    uint32_t bad_u2 = F.neg(F.pow(F.generator(), pair.d - 1));
    std::set<uint32_t> powers;
    for (uint32_t x = 1; x < F.q(); ++x) powers.insert(F.pow(x, pair.d - 1));
    EXPECT_FALSE(powers.count(bad_u2));
    EXPECT_THROW(solve_linearized(F, bad_u2, 1, pair.d, 5), std::runtime_error);
}

TEST(Partition, CountsAtQ27) {
    auto pair = check_admissible(3, 3, 2);
    auto ctx = ff_build(3, 6);
    AGraphView view(ctx, pair.d);
    auto md = find_mu(pair, *ctx);
    auto part = build_partition(pair, view, md);
    EXPECT_EQ(part.x_vertices.size(), 19683u);  // q^3
    EXPECT_EQ(part.k_count, 531441u - 19683u);  // q^4 - q^3
}

TEST(Partition, OneTranslateIsFullyIndependent) {
    auto pair = check_admissible(3, 3, 2);
    auto ctx = ff_build(3, 6);
    AGraphView view(ctx, pair.d);
    auto md = find_mu(pair, *ctx);
    auto part = build_partition(pair, view, md);
    // color 0 is the plus half of the beta = 0 translate, i.e. I+ itself
    std::vector<uint32_t> iplus;
    for (uint32_t id = 0; id < part.color.size(); ++id)
        if (part.color[id] == 0) iplus.push_back(id);
    EXPECT_EQ(iplus.size(), 27u * 27 * 13);  // q^2 (q-1)/2
    for (size_t i = 0; i < iplus.size(); ++i)
        for (size_t j = i + 1; j < iplus.size(); ++j)
            ASSERT_FALSE(view.adjacent(iplus[i], iplus[j])) << iplus[i] << "," << iplus[j];
}

TEST(Phi, SampledAutomorphismAtQ27) {
    auto pair = check_admissible(3, 3, 2);
    auto ctx = ff_build(3, 6);
    AGraphView view(ctx, pair.d);
    const FieldCtx& F = *ctx;
    SplitMix64 rng(0);
    for (int it = 0; it < 10000; ++it) {
        uint32_t alpha = static_cast<uint32_t>(rng.below(F.q()));
        uint32_t id = static_cast<uint32_t>(rng.below(view.n_vertices()));
        uint32_t b = static_cast<uint32_t>(rng.below(view.Q()));
        uint32_t a = view.rho_inv(view.s_of(id));
        uint32_t y = F.sub(F.add(F.mul(view.pow_d(a), b), F.mul(a, view.pow_d(b))), view.x_of(id));
        uint32_t other = view.vertex_id(view.rho(b), y);
        if (other == id) continue;
        ASSERT_TRUE(view.adjacent(phi_translate(view, alpha, id), phi_translate(view, alpha, other)));
        uint32_t w = static_cast<uint32_t>(rng.below(view.n_vertices()));
        if (w != id && !view.adjacent(id, w))
            ASSERT_FALSE(view.adjacent(phi_translate(view, alpha, id), phi_translate(view, alpha, w)));
    }
}

TEST(Tau, FullEdgeTransferAtQ27) {
    // every A-graph edge maps to a G_f affine edge under tau, and the two
    // sides have the same edge and loop counts; with tau a bijection this is
    // a complete isomorphism verification
    auto ctx = ff_build(3, 6);
    AGraphView view(ctx, 9);
    GfView gf(ctx, monomial(10));
    const FieldCtx& F = *ctx;
    uint64_t a_edges = 0, a_loops = 0;
    for (uint32_t id = 0; id < view.n_vertices(); ++id) {
        if (view.loop(id)) ++a_loops;
        uint32_t a = view.rho_inv(view.s_of(id));
        uint32_t ad = view.pow_d(a);
        auto [u1, v1] = view.tau(id);
        uint32_t gf_u = gf.affine_id(u1, v1);
        for (uint32_t b = 0; b < view.Q(); ++b) {
            uint32_t y = F.sub(F.add(F.mul(ad, b), F.mul(a, view.pow_d(b))), view.x_of(id));
            uint32_t other = view.vertex_id(view.rho(b), y);
            if (other <= id) continue;
            ++a_edges;
            auto [u2, v2] = view.tau(other);
            if (!gf.adjacent(gf_u, gf.affine_id(u2, v2))) FAIL() << "tau dropped edge " << id << "," << other;
        }
    }
    uint64_t gf_edges = 0, gf_loops = 0;
    const uint32_t Q = gf.Q();
    for (uint32_t x = 0; x < Q; ++x)
        for (uint32_t y = 0; y < Q; ++y) {
            uint32_t u = gf.affine_id(x, y);
            if (gf.loop(u)) ++gf_loops;
            for (uint32_t x2 = 0; x2 < Q; ++x2) {
                uint32_t v = gf.affine_id(x2, F.sub(gf.f_table()[F.add(x, x2)], y));
                if (v > u) ++gf_edges;
            }
        }
    EXPECT_EQ(a_edges, gf_edges);
    EXPECT_EQ(a_loops, gf_loops);
}

TEST(ColorPlanar, FullPipelineAtQ27) {
    auto pair = check_admissible(3, 3, 2);
    auto cert = color_graph(pair, ff_build(3, 6), VerifyMode::full, 0, 2);
    EXPECT_TRUE(cert.verified) << cert.notes;
    EXPECT_EQ(cert.k_palette, 54u);
    EXPECT_LE(cert.x_palette, 54u);
    EXPECT_LE(cert.total_colors, 111u);
    EXPECT_LE(cert.x_max_degree, 53u);  // q + (q-1)
    EXPECT_EQ(cert.verify_mode, "full-stream");
    EXPECT_EQ(cert.colors.size(), 532171u);
    EXPECT_NE(cert.chi_lower_bound.find("(ceil 27)"), std::string::npos);  // 532171/19711 = 26.9987...
}

TEST(ColorPlanar, CertificateRoundTripAndReverify) {
    auto pair = check_admissible(3, 3, 2);
    auto ctx = ff_build(3, 6);
    auto cert = color_graph(pair, ctx, VerifyMode::sample, 0);
    auto parsed = ColoringCertificate::parse(cert.to_text());
    EXPECT_EQ(parsed.colors, cert.colors);
    EXPECT_EQ(parsed.x_palette, cert.x_palette);
    // re-verify from the serialized map alone
    GfView gf(ctx, monomial(10));
    auto check = verify_gf_coloring(gf, parsed.colors, VerifyMode::full, 0, 2);
    EXPECT_TRUE(check.pass) << check.witness;
}

TEST(ColorPlanar, ByteIdenticalReruns) {
    auto pair = check_admissible(3, 3, 2);
    auto a = color_graph(pair, ff_build(3, 6), VerifyMode::sample, 0);
    auto b = color_graph(pair, ff_build(3, 6), VerifyMode::sample, 0);
    EXPECT_EQ(a.to_text(), b.to_text());
}

TEST(ColorPlanar, BrokenMapIsRejected) {
    auto pair = check_admissible(3, 3, 2);
    auto ctx = ff_build(3, 6);
    auto cert = color_graph(pair, ctx, VerifyMode::sample, 0);
    GfView gf(ctx, monomial(10));
    auto colors = cert.colors;
    // force a monochromatic affine edge: (0,0) ~ (x2, f(x2))
    uint32_t u = gf.affine_id(0, 0);
    uint32_t v = gf.affine_id(1, gf.f_table()[1]);
    colors[v] = colors[u];
    auto check = verify_gf_coloring(gf, colors, VerifyMode::full, 0);
    EXPECT_FALSE(check.pass);
    EXPECT_FALSE(check.witness.empty());
}

TEST(ColorDickson, FullPipelineAtQ9) {
    auto base = ff_build(3, 2);
    auto cert = color_dickson(base, 1, smallest_nonsquare(*base), VerifyMode::full, 0);
    EXPECT_TRUE(cert.verified) << cert.notes;
    EXPECT_EQ(cert.k_palette, 18u);
    EXPECT_LE(cert.x_palette, 18u);
    EXPECT_LE(cert.total_colors, 39u);
    EXPECT_LE(cert.x_max_degree, 17u);
    EXPECT_EQ(cert.colors.size(), 6643u);
    EXPECT_NE(cert.chi_lower_bound.find("(ceil 9)"), std::string::npos);
}

TEST(ColorDickson, TranslatesAreAutomorphismsExhaustively) {
    auto base = ff_build(3, 2);
    const FieldCtx& Fq = *base;
    auto ring = build_division_ring(DivisionRing::Kind::dickson, base, smallest_nonsquare(Fq), 1);
    auto plane = build_coordinatized_plane(ring);
    auto g = build_polarity_graph(orthogonal_polarity_dickson(plane));
    const DivisionRing& D = *ring;
    const uint32_t nD = D.size();
    for (uint32_t k = 0; k < Fq.q(); ++k) {
        for (uint32_t X1 = 0; X1 < nD; ++X1)
            for (uint32_t Y1 = 0; Y1 < nD; ++Y1) {
                uint32_t u = plane->affine_id(X1, Y1);
                auto [X1p, Y1p] = dickson_phi(D, k, X1, Y1);
                uint32_t up = plane->affine_id(X1p, Y1p);
                // spot the whole row against the translated row
                for (uint32_t X2 = 0; X2 < nD; ++X2) {
                    // adjacency X1*X2 = Y1 + Y2 determines Y2 uniquely
                    uint32_t Y2 = D.sub(D.mul(X1, X2), Y1);
                    uint32_t v = plane->affine_id(X2, Y2);
                    auto [X2p, Y2p] = dickson_phi(D, k, X2, Y2);
                    uint32_t vp = plane->affine_id(X2p, Y2p);
                    if (v == u) {
                        ASSERT_EQ(vp, up);
                        continue;
                    }
                    ASSERT_TRUE(g.adjacent(u, v));
                    ASSERT_TRUE(g.adjacent(up, vp)) << "k=" << k << " u=" << u << " v=" << v;
                }
            }
    }
}

TEST(ColorDickson, HalfSetsAreIndependent) {
    auto base = ff_build(3, 2);
    const FieldCtx& Fq = *base;
    auto ring = build_division_ring(DivisionRing::Kind::dickson, base, smallest_nonsquare(Fq), 1);
    auto plane = build_coordinatized_plane(ring);
    auto g = build_polarity_graph(orthogonal_polarity_dickson(plane));
    const DivisionRing& D = *ring;
    auto sp = half_partition(Fq);
    for (int side = 0; side < 2; ++side) {
        std::vector<uint32_t> members;
        for (uint32_t x2 = 0; x2 < Fq.q(); ++x2)
            for (uint32_t y1 = 0; y1 < Fq.q(); ++y1)
                for (uint32_t y2 = 1; y2 < Fq.q(); ++y2) {
                    if (side == 0 ? !sp.in_plus(y2) : !sp.in_minus(y2)) continue;
                    members.push_back(plane->affine_id(D.pack(0, x2), D.pack(y1, y2)));
                }
        EXPECT_EQ(members.size(), 324u);
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                ASSERT_FALSE(g.adjacent(members[i], members[j]));
    }
}

TEST(ColorDickson, SampleModeAndDeterminism) {
    auto base = ff_build(3, 2);
    uint32_t a = smallest_nonsquare(*base);
    auto c1 = color_dickson(base, 1, a, VerifyMode::sample, 0);
    auto c2 = color_dickson(ff_build(3, 2), 1, a, VerifyMode::sample, 0);
    EXPECT_TRUE(c1.verified);
    EXPECT_EQ(c1.to_text(), c2.to_text());
}

TEST(ColorPlanar, RejectsOversizedPipelines) {
    auto pair = check_admissible(5, 3, 2);  // q = 125
    EXPECT_THROW(color_graph(pair, ff_build(5, 6)), std::invalid_argument);
}
