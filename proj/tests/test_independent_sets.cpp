#include "polarity_lab/independent_sets.hpp"

#include <gtest/gtest.h>

using namespace plab;

namespace {

// independent oracle: exhaustive subset enumeration, feasible to n <= 20
uint32_t alpha_by_enumeration(const DenseGraph& g) {
    if (g.n() > 20) throw std::logic_error("enumeration oracle limited to 20 vertices");
    uint32_t best = 0;
    for (uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
        bool ok = true;
        for (uint32_t u = 0; u < g.n() && ok; ++u) {
            if (!(mask >> u & 1)) continue;
            for (uint32_t v = u + 1; v < g.n() && ok; ++v)
                if ((mask >> v & 1) && g.adjacent(u, v)) ok = false;
        }
        if (ok) best = std::max<uint32_t>(best, __builtin_popcount(mask));
    }
    return best;
}

uint32_t smallest_nonsquare(const FieldCtx& f) {
    for (uint32_t c = 1; c < f.q(); ++c)
        if (!is_square(f, c)) return c;
    throw std::logic_error("no non-square");
}

}  // namespace

TEST(Hoffman, ClosedFormAtSquareOrders) {
    auto h9 = hoffman_bound(9);
    EXPECT_EQ(h9.closed.str(), "31");  // 27 + 3 + 1
    EXPECT_EQ(h9.closed_ceiling, 31);
    auto h4 = hoffman_bound(4);
    EXPECT_EQ(h4.closed.str(), "11");  // 8 + 2 + 1
}

TEST(Hoffman, PrintedExpressionDisagreesByQMinusOne) {
    // the displayed ratio simplifies to q + (q+1)sqrt(q); the stated closed
    // form is 1 + (q+1)sqrt(q); the exact difference is q - 1
    for (uint64_t q : {2, 3, 4, 5, 7, 9, 25, 27, 81, 729}) {
        auto hb = hoffman_bound(q);
        EXPECT_TRUE(hb.discrepant);
        EXPECT_TRUE(hb.difference == Surd::rational(static_cast<int64_t>(q) - 1, 1, q)) << "q=" << q;
    }
    auto h9 = hoffman_bound(9);
    EXPECT_EQ(h9.eq1.str(), "39");
}

TEST(Hoffman, IrrationalCeilings) {
    auto h3 = hoffman_bound(3);
    EXPECT_EQ(h3.closed.str(), "(1+4*sqrt(3))");
    EXPECT_EQ(h3.closed_ceiling, 8);  // 1 + 4*1.732... = 7.93
    auto h2 = hoffman_bound(2);
    EXPECT_EQ(h2.closed_ceiling, 6);  // 1 + 3*1.414... = 5.24
    auto h5 = hoffman_bound(5);
    EXPECT_EQ(h5.closed_ceiling, 15);  // 1 + 6*2.236... = 14.4
}

TEST(Surd, ExactComparisons) {
    Surd a = Surd::root(1, 2);                    // sqrt(2)
    Surd b = Surd::rational(141421, 100000, 2);   // 1.41421
    Surd c = Surd::rational(141422, 100000, 2);
    EXPECT_TRUE(b < a);
    EXPECT_TRUE(a < c);
    EXPECT_TRUE((a * a) == Surd::rational(2, 1, 2));
    Surd folded = Surd::root(3, 9);  // 3*sqrt(9) = 9
    EXPECT_EQ(folded.str(), "9");
}

TEST(Oracle, ErTwoMatchesEnumeration) {
    auto g = build_er(ff_build(2, 1));
    uint32_t truth = alpha_by_enumeration(g);
    EXPECT_EQ(truth, 3u);
    auto cert = max_independent_exact(g);
    EXPECT_EQ(cert.size, truth);
    EXPECT_TRUE(cert.verified);
}

TEST(Oracle, ErThreeMatchesEnumeration) {
    auto g = build_er(ff_build(3, 1));
    uint32_t truth = alpha_by_enumeration(g);
    auto cert = max_independent_exact(g);
    EXPECT_EQ(cert.size, truth);
    // alpha is bounded by the closed-form value, which is below 8 at q = 3
    EXPECT_LE(cert.size, 7u);
    // the absolute points are an independent set, so alpha >= q + 1
    EXPECT_GE(cert.size, 4u);
}

TEST(Oracle, DeterministicWitness) {
    auto g = build_uq(ff_build(3, 2));
    auto a = max_independent_exact(g);
    auto b = max_independent_exact(g);
    EXPECT_EQ(a.vertices, b.vertices);
    EXPECT_EQ(a.to_text(), b.to_text());
}

TEST(Oracle, RefusesOverLimit) {
    DenseGraph big(300, "graph{adhoc}");
    try {
        max_independent_exact(big);
        FAIL() << "expected refusal";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("greedy"), std::string::npos);
    }
}

TEST(Oracle, AbsolutePointsAreIndependentEverywhere) {
    // loop set of any built polarity graph is an independent set
    for (auto g : {build_er(ff_build(2, 1)), build_er(ff_build(3, 1)), build_uq(ff_build(3, 2)),
                   build_uq_star(ff_build(3, 2))}) {
        auto loops = g.loop_vertices();
        std::string w;
        EXPECT_TRUE(detail::pairwise_independent(
            loops, [&g](uint32_t a, uint32_t b) { return g.adjacent(a, b); }, &w))
            << g.descriptor() << ": " << w;
    }
}

TEST(Greedy, ProducesAnIndependentSet) {
    auto g = build_uq(ff_build(3, 2));
    auto ids = greedy_independent_set(g);
    EXPECT_FALSE(ids.empty());
    std::string w;
    EXPECT_TRUE(detail::pairwise_independent(
        ids, [&g](uint32_t a, uint32_t b) { return g.adjacent(a, b); }, &w));
    EXPECT_EQ(ids, greedy_independent_set(g));
}

TEST(Thm1, SizeNineAtQThree) {
    auto cert = construct_thm1(ff_build(3, 2), monomial(2));
    EXPECT_EQ(cert.size, 9u);  // q^2(q-1)/2 at q=3
    EXPECT_TRUE(cert.verified);
    EXPECT_TRUE(cert.absolute_free);
    EXPECT_EQ(cert.verify_mode, "exhaustive-pairwise");
}

TEST(Thm1, SizeFiftyAtQFive) {
    auto cert = construct_thm1(ff_build(5, 2), monomial(2));
    EXPECT_EQ(cert.size, 50u);
    EXPECT_TRUE(cert.verified);
}

TEST(Thm1, SizeAtQNine) {
    auto cert = construct_thm1(ff_build(3, 4), monomial(2));
    EXPECT_EQ(cert.size, 324u);  // 81*8/2
    EXPECT_TRUE(cert.verified);
    EXPECT_TRUE(cert.absolute_free);
}

TEST(Thm1, CoefficientOutsideSubfieldRejected) {
    auto ctx = ff_build(3, 2);
    uint32_t mu = ctx->from_coeffs({0, 1});  // basis element X, not in GF(3)
    std::vector<uint32_t> f = {0, mu, 1};    // X^2 + mu*X
    EXPECT_THROW(construct_thm1(ctx, f), std::invalid_argument);
}

TEST(Thm1, NonPlanarAndOddDegreeRejected) {
    EXPECT_THROW(construct_thm1(ff_build(3, 2), monomial(3)), std::invalid_argument);
    EXPECT_THROW(construct_thm1(ff_build(3, 3), monomial(2)), std::invalid_argument);
}

TEST(Thm2, Size324AtBaseNine) {
    auto ring = build_division_ring(DivisionRing::Kind::section3, ff_build(3, 2));
    auto plane = build_coordinatized_plane(ring);
    auto cert = construct_thm2(plane);
    EXPECT_EQ(cert.size, 324u);
    EXPECT_TRUE(cert.verified);
    EXPECT_TRUE(cert.absolute_free);
    EXPECT_EQ(cert.plane_order, 81u);
}

TEST(Thm2, MembersHaveNonzeroSquareLambdaPart) {
    auto ring = build_division_ring(DivisionRing::Kind::section3, ff_build(3, 2));
    auto plane = build_coordinatized_plane(ring);
    auto cert = construct_thm2(plane);
    const DivisionRing& D = *plane->ring;
    const FieldCtx& F = D.base();
    for (uint32_t v : cert.vertices) {
        uint32_t X = v / plane->order;
        uint32_t x2 = D.y_of(X);
        ASSERT_NE(x2, 0u);
        ASSERT_EQ(classify_square(F, x2), SquareClass::square);
    }
}

TEST(Thm2, AdjacencyWouldForceThetaToBeASquare) {
    auto base = ff_build(3, 2);
    auto ring = build_division_ring(DivisionRing::Kind::section3, base);
    auto plane = build_coordinatized_plane(ring);
    auto cert = construct_thm2(plane);
    const DivisionRing& D = *plane->ring;
    const FieldCtx& F = *base;
    uint32_t theta = F.generator();
    EXPECT_FALSE(is_square(F, theta));
    SplitMix64 rng(0);
    for (int it = 0; it < 200; ++it) {
        uint32_t u = cert.vertices[rng.below(cert.vertices.size())];
        uint32_t v = cert.vertices[rng.below(cert.vertices.size())];
        if (u == v) continue;
        uint32_t X = u / plane->order, Y = u % plane->order;
        uint32_t Z = v / plane->order, T = v % plane->order;
        uint32_t x1 = D.x_of(X), x2 = D.y_of(X), y1 = D.x_of(Y);
        uint32_t z1 = D.x_of(Z), z2 = D.y_of(Z), t1 = D.x_of(T);
        // if the pair were adjacent, theta = (x2 z2)^-1 (-y1 - t1 - x1 z1)
        uint32_t rhs = F.mul(F.inv(F.mul(x2, z2)), F.neg(F.add(F.add(y1, t1), F.mul(x1, z1))));
        EXPECT_TRUE(is_square(F, rhs));  // square or zero, never theta
        EXPECT_NE(rhs, theta);
        // and the first component equation indeed fails
        uint32_t lhs = F.add(F.mul(x1, z1), F.mul(theta, F.mul(x2, z2)));
        EXPECT_NE(lhs, F.neg(F.add(y1, t1)));
    }
}

TEST(Thm2, WrongProvenanceRejected) {
    auto base = ff_build(3, 2);
    auto dickson = build_division_ring(DivisionRing::Kind::dickson, base, smallest_nonsquare(*base), 1);
    EXPECT_THROW(construct_thm2(build_coordinatized_plane(dickson)), std::invalid_argument);
    EXPECT_THROW(construct_thm2(build_pg2(ff_build(3, 1))), std::invalid_argument);
}

TEST(Thm3, OracleInnerAtQNine) {
    auto ctx = ff_build(3, 2);
    auto cert = construct_thm3(ctx);
    EXPECT_TRUE(cert.verified);
    EXPECT_TRUE(cert.absolute_free);
    EXPECT_GT(cert.size, 0u);
    EXPECT_NE(cert.provider_log.find("oracle"), std::string::npos);
    // all slices share one slice model, so the union size is slices * |J|
    auto sub = ctx->subfield(1);
    auto slice = detail::build_slice_graph(*ctx, sub);
    auto inner = max_independent_exact_raw(slice).witness;
    uint32_t removed = 0;
    for (uint32_t idx : inner) {
        uint32_t a = sub[idx / sub.size()], b = sub[idx % sub.size()];
        if (ctx->add(b, b) == ctx->mul(a, a)) ++removed;
    }
    EXPECT_EQ(cert.size, sub.size() * (inner.size() - removed));
}

TEST(Thm3, OracleInnerAtQTwentyFive) {
    auto cert = construct_thm3(ff_build(5, 2));
    EXPECT_TRUE(cert.verified);
    EXPECT_TRUE(cert.absolute_free);
    EXPECT_GT(cert.size, 0u);
}

TEST(Thm3, QEightyOneWithOracleAndThm1Providers) {
    auto ctx = ff_build(3, 4);
    auto oracle_cert = construct_thm3(ctx, InnerProvider::oracle);
    EXPECT_TRUE(oracle_cert.verified);
    EXPECT_TRUE(oracle_cert.absolute_free);
    auto thm1_cert = construct_thm3(ctx, InnerProvider::thm1_style);
    EXPECT_TRUE(thm1_cert.verified);
    EXPECT_TRUE(thm1_cert.absolute_free);
    EXPECT_LE(thm1_cert.size, oracle_cert.size);
    EXPECT_GT(thm1_cert.size, 0u);
}

TEST(Thm3, GreedyProviderStaysVerified) {
    auto cert = construct_thm3(ff_build(3, 2), InnerProvider::greedy);
    EXPECT_TRUE(cert.verified);
    EXPECT_TRUE(cert.absolute_free);
    EXPECT_NE(cert.provider_log.find("greedy"), std::string::npos);
}

TEST(Thm3, RejectsNonSquareOrders) {
    EXPECT_THROW(construct_thm3(ff_build(3, 3)), std::invalid_argument);
    EXPECT_THROW(construct_thm3(ff_build(5, 1)), std::invalid_argument);
}

TEST(UnitaryAbsolute, SizesAndIndependence) {
    auto c9 = unitary_absolute_set(ff_build(3, 2));
    EXPECT_EQ(c9.size, 28u);
    EXPECT_TRUE(c9.verified);
    EXPECT_FALSE(c9.absolute_free);
    auto c25 = unitary_absolute_set(ff_build(5, 2));
    EXPECT_EQ(c25.size, 126u);
    EXPECT_TRUE(c25.verified);
    auto c81 = unitary_absolute_set(ff_build(3, 4));
    EXPECT_EQ(c81.size, 730u);
    EXPECT_TRUE(c81.verified);
    EXPECT_THROW(unitary_absolute_set(ff_build(3, 3)), std::invalid_argument);
}

TEST(Certificates, TextRoundTrip) {
    auto cert = construct_thm1(ff_build(3, 2), monomial(2));
    auto text = cert.to_text();
    auto parsed = IndepCertificate::parse(text);
    EXPECT_EQ(parsed.size, cert.size);
    EXPECT_EQ(parsed.vertices, cert.vertices);
    EXPECT_EQ(parsed.construction, "thm1");
    EXPECT_TRUE(parsed.verified);
    EXPECT_NE(text.find("hoffman_closed"), std::string::npos);
}

TEST(Certificates, ConstructionSizeIsBoundedByAlpha) {
    // cross-validation of the oracle against the explicit constructions
    auto g = build_er(ff_build(3, 1));
    auto alpha = max_independent_exact(g);
    EXPECT_LE(uint64_t{g.order_q()} + 1, alpha.size);  // absolute set fits
    auto hb = hoffman_bound(3);
    EXPECT_LE(static_cast<int64_t>(alpha.size), hb.closed_ceiling);
}
