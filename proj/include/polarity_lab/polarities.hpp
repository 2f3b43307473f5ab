#ifndef POLARITY_LAB_POLARITIES_HPP
#define POLARITY_LAB_POLARITIES_HPP

#include <memory>
#include <string>
#include <vector>

#include "polarity_lab/planes.hpp"

namespace plab {

/// Involutive point<->line bijection attached to a plane.
struct Polarity {
    std::shared_ptr<const Plane> plane;
    std::vector<uint32_t> point_to_line;
    std::vector<uint32_t> line_to_point;
    std::string kind;

    std::string descriptor() const { return "polarity{" + kind + " " + plane->descriptor() + "}"; }

    bool absolute(uint32_t p) const { return plane->incident(p, point_to_line[p]); }
};

/// (x,y) -> [-x,-y], (c) -> [-c], (inf) <-> [inf] on a plane built from a
/// planar polynomial.
inline Polarity orthogonal_polarity_pi_f(std::shared_ptr<const Plane> plane) {
    if (plane->kind != PlaneKind::pi_f)
        throw std::invalid_argument("orthogonal_polarity_pi_f: plane was not built from a planar polynomial");
    const FieldCtx& f = *plane->field;
    const uint32_t Q = plane->order;
    Polarity pol;
    pol.kind = "orthogonal-pi-f";
    pol.point_to_line.resize(plane->n_points());
    pol.line_to_point.resize(plane->n_lines());
    for (uint32_t x = 0; x < Q; ++x)
        for (uint32_t y = 0; y < Q; ++y) {
            pol.point_to_line[plane->affine_id(x, y)] = f.neg(x) * Q + f.neg(y);
            pol.line_to_point[x * Q + y] = plane->affine_id(f.neg(x), f.neg(y));
        }
    for (uint32_t c = 0; c < Q; ++c) {
        pol.point_to_line[plane->slope_id(c)] = Q * Q + f.neg(c);
        pol.line_to_point[Q * Q + c] = plane->slope_id(f.neg(c));
    }
    pol.point_to_line[plane->infinity_id()] = plane->infinity_id();
    pol.line_to_point[plane->infinity_id()] = plane->infinity_id();
    pol.plane = std::move(plane);
    return pol;
}

/// (x,y) -> [x^a, -y^a] with (x+ly)^a = x + l*y^sigma, on the section3 plane.
inline Polarity polarity_pi_d(std::shared_ptr<const Plane> plane) {
    if (plane->kind != PlaneKind::pi_d || plane->ring->kind() != DivisionRing::Kind::section3)
        throw std::invalid_argument("polarity_pi_d: plane was not coordinatized by the section3 ring");
    const DivisionRing& D = *plane->ring;
    const uint32_t Q = plane->order;
    Polarity pol;
    pol.kind = "section3";
    pol.point_to_line.resize(plane->n_points());
    pol.line_to_point.resize(plane->n_lines());
    for (uint32_t x = 0; x < Q; ++x) {
        uint32_t xa = D.alpha(x);
        for (uint32_t y = 0; y < Q; ++y) {
            pol.point_to_line[plane->affine_id(x, y)] = xa * Q + D.neg(D.alpha(y));
            pol.line_to_point[x * Q + y] = plane->affine_id(xa, D.neg(D.alpha(y)));
        }
        pol.point_to_line[plane->slope_id(x)] = Q * Q + xa;
        pol.line_to_point[Q * Q + x] = plane->slope_id(xa);
    }
    pol.point_to_line[plane->infinity_id()] = plane->infinity_id();
    pol.line_to_point[plane->infinity_id()] = plane->infinity_id();
    pol.plane = std::move(plane);
    return pol;
}

/// (x,y) -> [x,-y] on a commutative (dickson) coordinatized plane.
inline Polarity orthogonal_polarity_dickson(std::shared_ptr<const Plane> plane) {
    if (plane->kind != PlaneKind::pi_d || plane->ring->kind() != DivisionRing::Kind::dickson)
        throw std::invalid_argument("orthogonal_polarity_dickson: plane was not coordinatized by a dickson ring");
    const DivisionRing& D = *plane->ring;
    const uint32_t Q = plane->order;
    Polarity pol;
    pol.kind = "orthogonal-dickson";
    pol.point_to_line.resize(plane->n_points());
    pol.line_to_point.resize(plane->n_lines());
    for (uint32_t x = 0; x < Q; ++x) {
        for (uint32_t y = 0; y < Q; ++y) {
            pol.point_to_line[plane->affine_id(x, y)] = x * Q + D.neg(y);
            pol.line_to_point[x * Q + y] = plane->affine_id(x, D.neg(y));
        }
        pol.point_to_line[plane->slope_id(x)] = Q * Q + x;
        pol.line_to_point[Q * Q + x] = plane->slope_id(x);
    }
    pol.point_to_line[plane->infinity_id()] = plane->infinity_id();
    pol.line_to_point[plane->infinity_id()] = plane->infinity_id();
    pol.plane = std::move(plane);
    return pol;
}

/// point (x0,x1,x2) -> line with coefficients (x0^s, x1^s, x2^s), s = sqrt(q),
/// on PG(2,q) of square order.
inline Polarity unitary_polarity_pg2(std::shared_ptr<const FieldCtx> ctx) {
    if (ctx->n() % 2 != 0) throw std::invalid_argument("unitary_polarity_pg2: field order must be a square");
    uint32_t half = ctx->n() / 2;
    auto plane = build_pg2(ctx);
    const FieldCtx& f = *plane->field;
    Polarity pol;
    pol.kind = "unitary-pg2";
    pol.point_to_line.resize(plane->n_points());
    pol.line_to_point.resize(plane->n_lines());
    for (uint32_t id = 0; id < plane->n_points(); ++id) {
        auto t = plane->pg2_triple(id);
        uint32_t conj = plane->pg2_id(f.frob(t[0], half), f.frob(t[1], half), f.frob(t[2], half));
        pol.point_to_line[id] = conj;
        pol.line_to_point[id] = conj;
    }
    pol.plane = std::move(plane);
    return pol;
}

/// Involution and incidence reversal.  Reversal is exhaustive on materialized
/// planes, otherwise a seeded sample of incident and arbitrary pairs plus all
/// absolute points.
inline CheckCertificate verify_polarity(const Polarity& pol, uint64_t seed = 0, uint64_t sample_pairs = 100000) {
    CheckCertificate cert = make_check("polarity-axioms", pol.descriptor());
    const Plane& pl = *pol.plane;
    const uint32_t n = pl.n_points();

    for (uint32_t p = 0; p < n && cert.pass; ++p)
        if (pol.line_to_point[pol.point_to_line[p]] != p) {
            cert.pass = false;
            cert.witness = "involution fails at point " + std::to_string(p);
        }
    for (uint32_t l = 0; l < n && cert.pass; ++l)
        if (pol.point_to_line[pol.line_to_point[l]] != l) {
            cert.pass = false;
            cert.witness = "involution fails at line " + std::to_string(l);
        }
    if (!cert.pass) return cert;

    if (pl.materialized()) {
        for (uint32_t p = 0; p < n && cert.pass; ++p)
            for (uint32_t l = 0; l < n; ++l)
                if (pl.incident(p, l) != pl.incident(pol.line_to_point[l], pol.point_to_line[p])) {
                    cert.pass = false;
                    cert.witness =
                        "reversal fails at point " + std::to_string(p) + ", line " + std::to_string(l);
                    break;
                }
        return cert;
    }

    cert.mode = "sampled(seed=" + std::to_string(seed) + ",pairs=" + std::to_string(sample_pairs) + ")";
    SplitMix64 rng(seed);
    for (uint64_t it = 0; it < sample_pairs && cert.pass; ++it) {
        uint32_t p = static_cast<uint32_t>(rng.below(n));
        auto lines = pl.lines_through(p);
        uint32_t l = lines[rng.below(lines.size())];
        if (!pl.incident_formula(pol.line_to_point[l], pol.point_to_line[p])) {
            cert.pass = false;
            cert.witness = "reversal fails at incident pair " + std::to_string(p) + "," + std::to_string(l);
        }
        uint32_t l2 = static_cast<uint32_t>(rng.below(n));
        if (cert.pass &&
            pl.incident_formula(p, l2) != pl.incident_formula(pol.line_to_point[l2], pol.point_to_line[p])) {
            cert.pass = false;
            cert.witness = "reversal fails at pair " + std::to_string(p) + "," + std::to_string(l2);
        }
    }
    for (uint32_t p = 0; p < n && cert.pass; ++p) {
        if (!pl.incident_formula(p, pol.point_to_line[p])) continue;
        if (!pl.incident_formula(pol.line_to_point[pol.point_to_line[p]], pol.point_to_line[p])) {
            cert.pass = false;
            cert.witness = "reversal fails at absolute point " + std::to_string(p);
        }
    }
    return cert;
}

struct AbsoluteReport {
    enum class Classification { orthogonal, unitary, neither, unknown };

    uint64_t count = 0;
    std::vector<uint32_t> points;
    Classification classification = Classification::unknown;
    uint32_t order = 0;
    bool baer_bound_holds = false;  // count >= order + 1
    std::string target;

    static const char* classification_name(Classification c) {
        switch (c) {
            case Classification::orthogonal: return "orthogonal";
            case Classification::unitary: return "unitary";
            case Classification::neither: return "neither";
            default: return "unknown";
        }
    }

    std::string to_text() const {
        Record r("absolute-report");
        r.add("target", target);
        r.add("target_hash", hex64(fnv1a64(target)));
        r.add("order", uint64_t{order});
        r.add("count", count);
        r.add("classification", std::string(classification_name(classification)));
        r.add("baer_bound_holds", baer_bound_holds);
        std::vector<uint32_t> head(points.begin(), points.begin() + std::min<size_t>(points.size(), 100));
        r.add("first_points", join_ids(head));
        r.add("points_hash", hex64(fnv1a64(points)));
        return r.to_text();
    }
};

/// Exact absolute-point census with the count-based classification:
/// order+1 -> orthogonal, order^(3/2)+1 -> unitary (square orders only),
/// anything else -> neither.
inline AbsoluteReport absolute_points(const Polarity& pol) {
    const Plane& pl = *pol.plane;
    AbsoluteReport rep;
    rep.order = pl.order;
    rep.target = pol.descriptor();
    for (uint32_t p = 0; p < pl.n_points(); ++p)
        if (pl.incident(p, pol.point_to_line[p])) rep.points.push_back(p);
    rep.count = rep.points.size();
    rep.baer_bound_holds = rep.count >= uint64_t{pl.order} + 1;
    uint64_t root = 0;
    if (rep.count == uint64_t{pl.order} + 1) {
        rep.classification = AbsoluteReport::Classification::orthogonal;
    } else if (is_perfect_square(pl.order, &root) && rep.count == root * root * root + 1) {
        rep.classification = AbsoluteReport::Classification::unitary;
    } else {
        rep.classification = AbsoluteReport::Classification::neither;
    }
    return rep;
}

}  // namespace plab

#endif  // POLARITY_LAB_POLARITIES_HPP
