#pragma once

// Geometry primitives for the upper half-space model of hyperbolic 3-space:
// points, boundary circles, geodesic planes, horospheres, similarity
// isometries fixing infinity, geodesic arcs, and the conformal area
// quadrature used by the surface solver.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hyplab {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double a) const { return {x * a, y * a}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double a) const { return {x * a, y * a, z * a}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    Vec2 xy() const { return {x, y}; }
};

// Point of the upper half-space model; valid only for z > 0.
using H3Point = Vec3;

inline void require_valid(const H3Point& p, const char* what = "point") {
    if (!(p.z > 0.0))
        throw DomainError(std::string(what) + ": height must be positive");
}

// Point of the boundary plane z = 0; infinity carries a flag.
struct BoundaryPoint {
    double x = 0.0;
    double y = 0.0;
    bool at_infinity = false;

    static BoundaryPoint infinity() { return {0.0, 0.0, true}; }
};

struct Circle2 {
    Vec2 center;
    double radius = 0.0;
};

// Totally geodesic plane: hemisphere over a boundary circle, or a vertical
// half-plane over a boundary line (point + unit direction).
struct GeodesicPlane {
    enum class Kind { Hemisphere, Vertical };
    Kind kind = Kind::Hemisphere;
    Circle2 footprint;   // hemisphere case
    Vec2 line_point;     // vertical case
    Vec2 line_dir;       // vertical case, unit length
};

// Horosphere z = height, centered at infinity.
struct Horosphere {
    double height = 0.0;
};

enum class Side { Negative, On, Positive };

// Boundary similarity w -> scale * R * w + t extended to an isometry
// (v, z) -> (scale * R * v + t, scale * z). Rotation stored as (cos, sin)
// so half-turns stay exact.
struct Similarity {
    double scale = 1.0;
    double rot_cos = 1.0;
    double rot_sin = 0.0;
    Vec2 translation;

    static Similarity identity() { return {}; }
    static Similarity from_angle(double scale, double angle, Vec2 t) {
        return {scale, std::cos(angle), std::sin(angle), t};
    }
    static Similarity half_turn(double scale, Vec2 t) { return {scale, -1.0, 0.0, t}; }

    Vec2 map(const Vec2& w) const {
        return {scale * (rot_cos * w.x - rot_sin * w.y) + translation.x,
                scale * (rot_sin * w.x + rot_cos * w.y) + translation.y};
    }
    Similarity compose(const Similarity& inner) const;
    Similarity inverse() const;
};

// Geodesic from an interior point to a boundary point: either a vertical
// ray or an arc of a circle orthogonal to the boundary plane. The carrying
// circle has its center on z = 0.
struct GeodesicArc {
    bool vertical = false;
    Vec2 foot;        // finite ideal endpoint (or the vertical line's foot)
    Vec2 center;      // circle center on the boundary plane (arc case)
    double radius = 0.0;
    Vec2 toward_foot; // unit direction from center to foot (arc case)

    // Point on the descending branch (the foot side) at the given height.
    H3Point point_at_height(double z) const;
};

double hyp_distance(const H3Point& p, const H3Point& q);

GeodesicArc geodesic_to_boundary(const H3Point& p, const BoundaryPoint& q);

GeodesicPlane plane_from_circle(const Circle2& c);

inline constexpr double kDefaultOnTolerance = 1e-10;

Side side_of_plane(const GeodesicPlane& plane, const H3Point& p,
                   double on_tolerance = kDefaultOnTolerance);

// Hyperbolic distance from a point to a geodesic plane (hemisphere case:
// closed form sinh d = |r^2 - rho^2| / (2 rho z)).
double distance_to_plane(const GeodesicPlane& plane, const H3Point& p);

H3Point apply_isometry(const Similarity& s, const H3Point& p);
Circle2 apply_isometry(const Similarity& s, const Circle2& c);
GeodesicPlane apply_isometry(const Similarity& s, const GeodesicPlane& plane);

// Area of a flat triangle against the conformal weight 1/z^2, by interior
// quadrature of order 1, 3 or 6. Degenerate triangles contribute zero.
double tri_area_hyp(const H3Point& p1, const H3Point& p2, const H3Point& p3,
                    int quad_order = 3);

// Gradient of tri_area_hyp with respect to the three vertex positions.
std::array<Vec3, 3> tri_area_hyp_gradient(const H3Point& p1, const H3Point& p2,
                                          const H3Point& p3, int quad_order = 3);

}  // namespace hyplab
