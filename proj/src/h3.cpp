#include "hyplab/h3.hpp"

#include <algorithm>

namespace hyplab {

Similarity Similarity::compose(const Similarity& inner) const {
    // this o inner
    Similarity out;
    out.scale = scale * inner.scale;
    out.rot_cos = rot_cos * inner.rot_cos - rot_sin * inner.rot_sin;
    out.rot_sin = rot_sin * inner.rot_cos + rot_cos * inner.rot_sin;
    Vec2 t = map(inner.translation);
    // map() already applies this->translation
    out.translation = t;
    return out;
}

Similarity Similarity::inverse() const {
    Similarity out;
    out.scale = 1.0 / scale;
    out.rot_cos = rot_cos;
    out.rot_sin = -rot_sin;
    Vec2 rt{rot_cos * translation.x + rot_sin * translation.y,
            -rot_sin * translation.x + rot_cos * translation.y};
    out.translation = {-rt.x / scale, -rt.y / scale};
    return out;
}

double hyp_distance(const H3Point& p, const H3Point& q) {
    require_valid(p);
    require_valid(q);
    // cosh d = 1 + |p-q|^2 / (2 zp zq), evaluated as d = 2 asinh(...) which
    // stays accurate for nearby points.
    const double r = (p - q).norm();
    return 2.0 * std::asinh(r / (2.0 * std::sqrt(p.z * q.z)));
}

H3Point GeodesicArc::point_at_height(double z) const {
    if (!(z > 0.0)) throw DomainError("point_at_height: height must be positive");
    if (vertical) return {foot.x, foot.y, z};
    if (z > radius) throw DomainError("point_at_height: height exceeds arc apex");
    const double s = std::sqrt(std::max(0.0, radius * radius - z * z));
    return {center.x + toward_foot.x * s, center.y + toward_foot.y * s, z};
}

GeodesicArc geodesic_to_boundary(const H3Point& p, const BoundaryPoint& q) {
    require_valid(p);
    GeodesicArc arc;
    if (q.at_infinity) {
        arc.vertical = true;
        arc.foot = {p.x, p.y};
        return arc;
    }
    const Vec2 w{p.x - q.x, p.y - q.y};
    const double rho = w.norm();
    if (rho == 0.0) {
        arc.vertical = true;
        arc.foot = {q.x, q.y};
        return arc;
    }
    // Circle orthogonal to the boundary plane through p with ideal endpoint q:
    // center at distance a from q toward p's projection, radius a, with
    // rho^2 - 2 a rho + z^2 = 0.
    const double a = (rho * rho + p.z * p.z) / (2.0 * rho);
    arc.vertical = false;
    arc.foot = {q.x, q.y};
    const Vec2 dir{w.x / rho, w.y / rho};
    arc.center = {q.x + dir.x * a, q.y + dir.y * a};
    arc.radius = a;
    arc.toward_foot = {-dir.x, -dir.y};
    return arc;
}

GeodesicPlane plane_from_circle(const Circle2& c) {
    if (!(c.radius > 0.0)) throw DomainError("plane_from_circle: radius must be positive");
    GeodesicPlane plane;
    plane.kind = GeodesicPlane::Kind::Hemisphere;
    plane.footprint = c;
    return plane;
}

namespace {

// Signed value vanishing on the plane; sign fixed so the origin side is
// negative.
double plane_signed_value(const GeodesicPlane& plane, const H3Point& p) {
    if (plane.kind == GeodesicPlane::Kind::Hemisphere) {
        const Vec2 d{p.x - plane.footprint.center.x, p.y - plane.footprint.center.y};
        const double f = d.norm2() + p.z * p.z - plane.footprint.radius * plane.footprint.radius;
        const double f0 = plane.footprint.center.norm2() - plane.footprint.radius * plane.footprint.radius;
        return f0 < 0.0 ? f : -f;
    }
    const Vec2 n{-plane.line_dir.y, plane.line_dir.x};
    const double f = n.dot({p.x - plane.line_point.x, p.y - plane.line_point.y});
    const double f0 = n.dot({-plane.line_point.x, -plane.line_point.y});
    return f0 < 0.0 ? f : -f;
}

}  // namespace

Side side_of_plane(const GeodesicPlane& plane, const H3Point& p, double on_tolerance) {
    const double v = plane_signed_value(plane, p);
    if (std::abs(v) <= on_tolerance) return Side::On;
    return v < 0.0 ? Side::Negative : Side::Positive;
}

double distance_to_plane(const GeodesicPlane& plane, const H3Point& p) {
    require_valid(p);
    if (plane.kind == GeodesicPlane::Kind::Hemisphere) {
        const Vec2 d{p.x - plane.footprint.center.x, p.y - plane.footprint.center.y};
        const double r2 = d.norm2() + p.z * p.z;
        const double rho = plane.footprint.radius;
        return std::asinh(std::abs(r2 - rho * rho) / (2.0 * rho * p.z));
    }
    const Vec2 n{-plane.line_dir.y, plane.line_dir.x};
    const double off = n.dot({p.x - plane.line_point.x, p.y - plane.line_point.y});
    return std::asinh(std::abs(off) / p.z);
}

H3Point apply_isometry(const Similarity& s, const H3Point& p) {
    const Vec2 v = s.map({p.x, p.y});
    return {v.x, v.y, s.scale * p.z};
}

Circle2 apply_isometry(const Similarity& s, const Circle2& c) {
    return {s.map(c.center), s.scale * c.radius};
}

GeodesicPlane apply_isometry(const Similarity& s, const GeodesicPlane& plane) {
    GeodesicPlane out = plane;
    if (plane.kind == GeodesicPlane::Kind::Hemisphere) {
        out.footprint = apply_isometry(s, plane.footprint);
    } else {
        out.line_point = s.map(plane.line_point);
        Vec2 d{s.rot_cos * plane.line_dir.x - s.rot_sin * plane.line_dir.y,
               s.rot_sin * plane.line_dir.x + s.rot_cos * plane.line_dir.y};
        out.line_dir = d;
    }
    return out;
}

namespace {

struct QuadPoint {
    double b0, b1, b2, w;
};

// Interior rules: order 1 (degree 1), order 3 (degree 2), order 6 (degree 4).
const QuadPoint kQuad1[] = {
    {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 1.0},
};
const QuadPoint kQuad3[] = {
    {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0},
    {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0, 1.0 / 3.0},
    {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0, 1.0 / 3.0},
};
const double kA1 = 0.816847572980459, kB1 = 0.091576213509771, kW1 = 0.109951743655322;
const double kA2 = 0.108103018168070, kB2 = 0.445948490915965, kW2 = 0.223381589678011;
const QuadPoint kQuad6[] = {
    {kA1, kB1, kB1, kW1}, {kB1, kA1, kB1, kW1}, {kB1, kB1, kA1, kW1},
    {kA2, kB2, kB2, kW2}, {kB2, kA2, kB2, kW2}, {kB2, kB2, kA2, kW2},
};

void quad_rule(int order, const QuadPoint*& pts, int& count) {
    switch (order) {
        case 1: pts = kQuad1; count = 1; return;
        case 3: pts = kQuad3; count = 3; return;
        case 6: pts = kQuad6; count = 6; return;
        default: throw DomainError("tri_area_hyp: quad_order must be 1, 3 or 6");
    }
}

}  // namespace

double tri_area_hyp(const H3Point& p1, const H3Point& p2, const H3Point& p3, int quad_order) {
    const QuadPoint* pts;
    int count;
    quad_rule(quad_order, pts, count);
    const Vec3 n = (p2 - p1).cross(p3 - p1);
    const double area_euc = 0.5 * n.norm();
    if (area_euc == 0.0) return 0.0;
    double s = 0.0;
    for (int i = 0; i < count; ++i) {
        const double z = pts[i].b0 * p1.z + pts[i].b1 * p2.z + pts[i].b2 * p3.z;
        s += pts[i].w / (z * z);
    }
    return area_euc * s;
}

std::array<Vec3, 3> tri_area_hyp_gradient(const H3Point& p1, const H3Point& p2,
                                          const H3Point& p3, int quad_order) {
    const QuadPoint* pts;
    int count;
    quad_rule(quad_order, pts, count);
    std::array<Vec3, 3> grad{Vec3{}, Vec3{}, Vec3{}};
    const Vec3 n = (p2 - p1).cross(p3 - p1);
    const double nn = n.norm();
    if (nn == 0.0) return grad;
    const Vec3 nh = n * (1.0 / nn);
    const double area_euc = 0.5 * nn;

    double s = 0.0;
    double ds[3] = {0.0, 0.0, 0.0};
    for (int i = 0; i < count; ++i) {
        const double b[3] = {pts[i].b0, pts[i].b1, pts[i].b2};
        const double z = b[0] * p1.z + b[1] * p2.z + b[2] * p3.z;
        s += pts[i].w / (z * z);
        const double dz = -2.0 * pts[i].w / (z * z * z);
        for (int k = 0; k < 3; ++k) ds[k] += dz * b[k];
    }

    // d(area_euc)/dp_k = ((p_{k+1} - p_{k+2}) x nh) / 2
    const Vec3 da[3] = {
        (p2 - p3).cross(nh) * 0.5,
        (p3 - p1).cross(nh) * 0.5,
        (p1 - p2).cross(nh) * 0.5,
    };
    for (int k = 0; k < 3; ++k) {
        grad[k] = da[k] * s;
        grad[k].z += area_euc * ds[k];
    }
    return grad;
}

}  // namespace hyplab
