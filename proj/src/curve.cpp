#include "hyplab/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace hyplab {

namespace {
constexpr double kPi = std::numbers::pi;
}

void CurveParams::validate() const {
    if (n < 1) throw DomainError("curve params: n >= 1 required");
    if (!(del1 > 0.0)) throw ConstructionError("curve params: 0 < del1 violated");
    if (!(del1 < eps1)) throw ConstructionError("curve params: del1 < eps1 violated");
    if (!(2.0 * del1 < 0.5))
        throw ConstructionError("curve params: 2*del1 < r1 - r2 = 1/2 violated");
    if (samples_per_unit < 16)
        throw ConstructionError("curve params: samples_per_unit >= 16 violated");
}

double circle_radius(int k) {
    if (k < 1) throw DomainError("circle_radius: k >= 1 required");
    return 1.0 + 1.0 / static_cast<double>(k);
}

double bridge_scale(int k) {
    if (k < 1) throw DomainError("bridge_scale: k >= 1 required");
    return 2.0 / (static_cast<double>(k) * static_cast<double>(k + 1));
}

TunnelFootprint eta_circles(int k, const CurveParams& params) {
    if (k < 1) throw DomainError("eta_circles: k >= 1 required");
    const double sigma = bridge_scale(k);
    const double eps_k = sigma * params.eps1;
    const double del_k = sigma * params.del1;
    const double mid = 0.5 * (circle_radius(k) + circle_radius(k + 1));
    const double x = (k % 2 == 1) ? mid : -mid;
    TunnelFootprint fp;
    fp.index = k;
    fp.right_side = (k % 2 == 1);
    fp.plus_circle = {{x, eps_k}, del_k};
    fp.minus_circle = {{x, -eps_k}, del_k};
    return fp;
}

namespace {

double bridge_half_width(int j, const CurveParams& params) {
    return 0.5 * bridge_scale(j) * (params.eps1 - params.del1);
}

}  // namespace

std::pair<Vec2, Vec2> gap_endpoints(int k, int bridge, const CurveParams& params) {
    if (k < 1) throw DomainError("gap_endpoints: k >= 1 required");
    if (bridge != k && bridge != k - 1)
        throw DomainError("gap_endpoints: bridge must be k or k-1");
    const double r = circle_radius(k);
    const double w = bridge_half_width(bridge, params);
    if (!(w < r))
        throw ConstructionError("gap_endpoints: band half-width < circle radius violated");
    const double x = std::sqrt(r * r - w * w);
    const double sx = (bridge % 2 == 1) ? 1.0 : -1.0;
    return {{sx * x, w}, {sx * x, -w}};
}

namespace {

struct PieceBuilder {
    std::vector<Vec2> vertices;
    std::vector<EdgeTag> tags;

    void append(const std::vector<Vec2>& pts, const EdgeTag& tag) {
        // pts includes both endpoints; the first is dropped when it repeats
        // the current tail.
        size_t start = 0;
        if (!vertices.empty()) start = 1;
        for (size_t i = start; i < pts.size(); ++i) {
            vertices.push_back(pts[i]);
            tags.push_back(tag);
        }
    }
};

// Circle arc sampled from angle a0 to a1 (monotone sweep, either direction),
// endpoints pinned to exact positions.
std::vector<Vec2> sample_arc(double r, double a0, double a1, const Vec2& exact0,
                             const Vec2& exact1, int samples_per_unit) {
    const double len = std::abs(a1 - a0) * r;
    const int segs = std::max(2, static_cast<int>(std::ceil(len * samples_per_unit)));
    std::vector<Vec2> pts;
    pts.reserve(segs + 1);
    pts.push_back(exact0);
    for (int i = 1; i < segs; ++i) {
        const double t = static_cast<double>(i) / segs;
        const double a = a0 + (a1 - a0) * t;
        pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    pts.push_back(exact1);
    return pts;
}

std::vector<Vec2> sample_segment(const Vec2& a, const Vec2& b, int samples_per_unit) {
    const double len = (b - a).norm();
    const int segs = std::max(8, static_cast<int>(std::ceil(len * samples_per_unit)));
    std::vector<Vec2> pts;
    pts.reserve(segs + 1);
    pts.push_back(a);
    for (int i = 1; i < segs; ++i) {
        const double t = static_cast<double>(i) / segs;
        pts.push_back({a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t});
    }
    pts.push_back(b);
    return pts;
}

// Gap endpoint angle on circle k for the given bridge; upper = y > 0.
double gap_angle(int k, int bridge, bool upper, const CurveParams& params) {
    const double r = circle_radius(k);
    const double w = bridge_half_width(bridge, params);
    const double theta = std::asin(w / r);
    if (bridge % 2 == 1) return upper ? theta : 2.0 * kPi - theta;
    return upper ? kPi - theta : kPi + theta;
}

Vec2 gap_point(int k, int bridge, bool upper, const CurveParams& params) {
    auto [up, down] = gap_endpoints(k, bridge, params);
    return upper ? up : down;
}

}  // namespace

GammaCurve build_gamma(const CurveParams& params) {
    params.validate();
    const int n = params.n;
    const int spu = params.samples_per_unit;
    GammaCurve curve;
    curve.n = n;

    if (n == 1) {
        const double r = circle_radius(1);
        const int segs = std::max(2, static_cast<int>(std::ceil(2.0 * kPi * r * spu)));
        for (int i = 0; i < segs; ++i) {
            const double a = 2.0 * kPi * i / segs;
            curve.vertices.push_back({r * std::cos(a), r * std::sin(a)});
            curve.tags.push_back({EdgeTag::Kind::Arc, 1, 0});
        }
        return curve;
    }

    PieceBuilder pb;
    auto arc_tag = [](int k) { return EdgeTag{EdgeTag::Kind::Arc, k, 0}; };
    auto bridge_tag = [](int j, int side) { return EdgeTag{EdgeTag::Kind::Bridge, j, side}; };

    // Outward leg: big arc of circle 1, then lower arcs and lower bridge
    // segments down to circle n.
    {
        const double a0 = gap_angle(1, 1, true, params);
        const double a1 = gap_angle(1, 1, false, params);
        pb.append(sample_arc(circle_radius(1), a0, a1, gap_point(1, 1, true, params),
                             gap_point(1, 1, false, params), spu),
                  arc_tag(1));
    }
    for (int k = 2; k <= n; ++k) {
        pb.append(sample_segment(gap_point(k - 1, k - 1, false, params),
                                 gap_point(k, k - 1, false, params), spu),
                  bridge_tag(k - 1, -1));
        if (k < n) {
            // Lower arc between the two gaps of circle k; the sweep stays in
            // the lower half-plane whichever side bridge k-1 sits on.
            const double a0 = gap_angle(k, k - 1, false, params);
            const double a1 = gap_angle(k, k, false, params);
            pb.append(sample_arc(circle_radius(k), a0, a1, gap_point(k, k - 1, false, params),
                                 gap_point(k, k, false, params), spu),
                      arc_tag(k));
        } else {
            // Innermost circle: big arc from the lower to the upper endpoint
            // of its single gap, around the far side.
            double a0 = gap_angle(k, k - 1, false, params);
            double a1 = gap_angle(k, k - 1, true, params);
            if ((k - 1) % 2 == 0)
                a1 += 2.0 * kPi;  // left-side gap: increase through the right side
            pb.append(sample_arc(circle_radius(k), a0, a1, gap_point(k, k - 1, false, params),
                                 gap_point(k, k - 1, true, params), spu),
                      arc_tag(k));
        }
    }
    // Return leg: upper bridge segments and upper arcs back to circle 1.
    for (int k = n - 1; k >= 1; --k) {
        pb.append(sample_segment(gap_point(k + 1, k, true, params),
                                 gap_point(k, k, true, params), spu),
                  bridge_tag(k, +1));
        if (k > 1) {
            double a0 = gap_angle(k, k, true, params);
            double a1 = gap_angle(k, k - 1, true, params);
            if (k % 2 == 1 && a1 < a0) a1 += 2.0 * kPi;
            pb.append(sample_arc(circle_radius(k), a0, a1, gap_point(k, k, true, params),
                                 gap_point(k, k - 1, true, params), spu),
                      arc_tag(k));
        }
    }

    // The last appended vertex closes the loop at the first vertex.
    if ((pb.vertices.back() - pb.vertices.front()).norm() > 1e-12)
        throw ConstructionError("build_gamma: traversal failed to close");
    pb.vertices.pop_back();

    curve.vertices = std::move(pb.vertices);
    curve.tags = std::move(pb.tags);
    return curve;
}

namespace {

double point_segment_dist(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = ab.norm2();
    double t = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Vec2 c{a.x + ab.x * t, a.y + ab.y * t};
    return (p - c).norm();
}

}  // namespace

int winding_number(const std::vector<Vec2>& vertices, const Vec2& pt) {
    const size_t m = vertices.size();
    for (size_t i = 0; i < m; ++i) {
        if (point_segment_dist(pt, vertices[i], vertices[(i + 1) % m]) < 1e-12)
            throw DomainError("winding_number: point lies on the curve");
    }
    double total = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const Vec2 a = vertices[i] - pt;
        const Vec2 b = vertices[(i + 1) % m] - pt;
        total += std::atan2(a.x * b.y - a.y * b.x, a.dot(b));
    }
    return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

namespace {

int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const int o1 = orient(a, b, c);
    const int o2 = orient(a, b, d);
    const int o3 = orient(c, d, a);
    const int o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    auto on_seg = [](const Vec2& p, const Vec2& q, const Vec2& r) {
        return std::min(p.x, r.x) <= q.x && q.x <= std::max(p.x, r.x) &&
               std::min(p.y, r.y) <= q.y && q.y <= std::max(p.y, r.y);
    };
    if (o1 == 0 && on_seg(a, c, b)) return true;
    if (o2 == 0 && on_seg(a, d, b)) return true;
    if (o3 == 0 && on_seg(c, a, d)) return true;
    if (o4 == 0 && on_seg(c, b, d)) return true;
    return false;
}

}  // namespace

bool is_simple(const std::vector<Vec2>& vertices) {
    const size_t m = vertices.size();
    for (size_t i = 0; i < m; ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % m];
        for (size_t j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue;  // adjacent around the wrap
            if (segments_intersect(a, b, vertices[j], vertices[(j + 1) % m])) return false;
        }
    }
    return true;
}

double clearance(const GammaCurve& curve, const std::vector<TunnelFootprint>& footprints) {
    if (footprints.empty()) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    const size_t m = curve.vertices.size();
    for (const auto& fp : footprints) {
        for (const Circle2* c : {&fp.plus_circle, &fp.minus_circle}) {
            for (size_t i = 0; i < m; ++i) {
                const double d =
                    point_segment_dist(c->center, curve.vertices[i], curve.vertices[(i + 1) % m]) -
                    c->radius;
                best = std::min(best, std::max(0.0, d));
            }
        }
    }
    return best;
}

std::string curve_to_text(const GammaCurve& curve) {
    std::string out;
    char buf[128];
    for (size_t i = 0; i < curve.vertices.size(); ++i) {
        const EdgeTag& t = curve.tags[i];
        if (t.kind == EdgeTag::Kind::Arc)
            std::snprintf(buf, sizeof(buf), "%.17g %.17g arc(%d)\n", curve.vertices[i].x,
                          curve.vertices[i].y, t.index);
        else
            std::snprintf(buf, sizeof(buf), "%.17g %.17g bridge(%d,%c)\n", curve.vertices[i].x,
                          curve.vertices[i].y, t.index, t.side > 0 ? '+' : '-');
        out += buf;
    }
    return out;
}

}  // namespace hyplab
