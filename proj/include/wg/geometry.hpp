#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wg/errors.hpp"

namespace wg {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

// Named analytic plane curves y = g(x). Mesh files reference entries by name
// for `graph` edges; the benchmark problems register theirs at startup.
class CurveRegistry {
public:
    struct Entry {
        std::function<double(double)> value;
        std::function<double(double)> deriv;
    };

    void add(const std::string& name, Entry entry) { entries_[name] = std::move(entry); }
    bool contains(const std::string& name) const { return entries_.count(name) > 0; }
    const Entry& get(const std::string& name) const;

    static CurveRegistry& global();

private:
    std::map<std::string, Entry> entries_;
};

// Edge geometries. Every edge is parameterized over t in [0,1]; the native
// parameter (chord fraction, angle, abscissa) is affine in t.
struct LineSpec {
    Point2 p0, p1;
};
struct ArcSpec {
    Point2 center;
    double radius = 0.0;
    double theta0 = 0.0;
    double theta1 = 0.0;
};
struct GraphSpec {
    std::string curve_name;
    double x0 = 0.0;
    double x1 = 0.0;
};
using CurveSpec = std::variant<LineSpec, ArcSpec, GraphSpec>;

struct Edge {
    int id = -1;
    int v0 = -1;
    int v1 = -1;
    CurveSpec geometry = LineSpec{};
    double h_e = 0.0; // arc length
    bool boundary = false;
};

// Signed reference to an edge within an element loop. `reversed == false`
// means the loop traverses the edge from v0 to v1 (increasing t).
struct SignedEdge {
    int edge = -1;
    bool reversed = false;
};

struct Element {
    int id = -1;
    std::vector<SignedEdge> loop; // counterclockwise
    Point2 x_T;                   // moment centroid
    double h_T = 0.0;             // diameter
    double area = 0.0;            // |T|
};

struct EdgeUse {
    int element = -1;
    bool reversed = false;
};

struct Mesh {
    std::vector<Point2> vertices;
    std::vector<Edge> edges;
    std::vector<Element> elements;
    double h = 0.0; // max h_T

    // edge id -> elements referencing it (1 = boundary, 2 = interior)
    std::vector<std::vector<EdgeUse>> edge_uses;

    int loop_start_vertex(const Element& el, std::size_t i) const;
    int loop_end_vertex(const Element& el, std::size_t i) const;
};

// --- curve evaluation -------------------------------------------------------

Point2 point_at(const Edge& edge, double t);
// dF/dt in the stored (v0 -> v1) direction
Point2 tangent_at(const Edge& edge, double t);

// Unit normal pointing out of `element`. The sign comes from the loop
// traversal direction: a counterclockwise loop keeps the interior on the left
// of travel, so the outward normal is the tangent rotated by -90 degrees.
Point2 outward_normal(const Edge& edge, double t, const Element& element);

// Integral of |F'(t)| over [0,1] by Gauss quadrature with order doubling,
// converged to 1e-12 relative.
double arc_length(const Edge& edge);

// --- mesh construction ------------------------------------------------------

struct EdgeDef {
    int v0 = -1;
    int v1 = -1;
    CurveSpec geometry = LineSpec{};
};

// Builds a validated mesh: resolves curve geometry against vertex positions,
// computes h_e, boundary flags, element centroids/diameters/areas, and the
// global meshsize. Throws ValidationError on structural defects (open or
// clockwise loops, nonpositive area, bad edge sharing, endpoint mismatch)
// and on degenerate curved edges (arc spanning >= pi).
Mesh build_mesh(std::vector<Point2> vertices,
                const std::vector<EdgeDef>& edges,
                const std::vector<std::vector<SignedEdge>>& loops,
                const CurveRegistry& registry = CurveRegistry::global());

// --- shape-regularity audit -------------------------------------------------

struct RegularityReport {
    double min_area_ratio = 0.0;    // min over T of |T| / h_T^2
    int min_area_ratio_element = -1;
    double min_edge_ratio = 0.0;    // min over (T, e) of h_e / h_T
    double max_edge_ratio = 0.0;    // max over (T, e) of h_e / h_T
    bool loops_closed = false;
    bool orientation_ok = false;
    bool edge_sharing_ok = false;
};

// Audits the A1-A2 ratios and re-runs the structural checks. Structural
// defects throw ValidationError naming the offending entity; a valid mesh
// gets a finite report.
RegularityReport validate(const Mesh& mesh);

} // namespace wg
