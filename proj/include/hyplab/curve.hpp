#pragma once

// Construction of the nested boundary circles, the bridge bands that splice
// consecutive circles into one closed curve, and the tunnel footprint
// circles sitting beside each bridge.

#include <string>
#include <vector>

#include "hyplab/h3.hpp"

namespace hyplab {

struct CurveParams {
    double eps1 = 0.12;        // bridge band offset for the first tunnel
    double del1 = 0.10;        // footprint circle radius for the first tunnel
    int samples_per_unit = 64; // polyline density, Euclidean arclength
    int n = 1;                 // number of circles spliced into the curve

    void validate() const;
};

struct EdgeTag {
    enum class Kind { Arc, Bridge };
    Kind kind = Kind::Arc;
    int index = 0;   // circle index for arcs, bridge index for bridges
    int side = 0;    // bridges: +1 for the y > 0 segment, -1 for y < 0
};

// Closed polyline in the boundary plane with per-edge provenance tags.
// Edge e joins vertex e and vertex (e+1) % size.
struct GammaCurve {
    int n = 0;
    std::vector<Vec2> vertices;
    std::vector<EdgeTag> tags;

    size_t size() const { return vertices.size(); }
};

struct TunnelFootprint {
    int index = 0;
    Circle2 plus_circle;   // center with y > 0
    Circle2 minus_circle;  // mirror image, y < 0
    bool right_side = true; // x > 0 iff index odd
};

// r_k = 1 + 1/k.
double circle_radius(int k);

// sigma_k = (r_k - r_{k+1}) / (r_1 - r_2) = 2 / (k (k+1)); bridge/tunnel k
// uses eps_k = sigma_k * eps1 and del_k = sigma_k * del1.
double bridge_scale(int k);

TunnelFootprint eta_circles(int k, const CurveParams& params);

// Endpoints of the arc removed from circle k for bridge j (j = k or k-1):
// (+-sqrt(r_k^2 - w^2), +-w) with w the bridge half-width of bridge j and
// the x sign matching the bridge side. Returns {upper, lower}.
std::pair<Vec2, Vec2> gap_endpoints(int k, int bridge, const CurveParams& params);

GammaCurve build_gamma(const CurveParams& params);

// Winding number of a closed polyline about a point (angle summation).
int winding_number(const std::vector<Vec2>& vertices, const Vec2& pt);

// Brute-force all-pairs segment test; true if the closed polyline has no
// self-intersections.
bool is_simple(const std::vector<Vec2>& vertices);

// Minimum Euclidean distance from the curve (vertices and edges) to any of
// the closed footprint disks; +infinity for an empty list.
double clearance(const GammaCurve& curve, const std::vector<TunnelFootprint>& footprints);

std::string curve_to_text(const GammaCurve& curve);

}  // namespace hyplab
