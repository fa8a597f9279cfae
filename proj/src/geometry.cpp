#include "wg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wg/gauss.hpp"

namespace wg {

const CurveRegistry::Entry& CurveRegistry::get(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end())
        throw DomainError("curve registry: unknown curve name '" + name + "'");
    return it->second;
}

CurveRegistry& CurveRegistry::global() {
    static CurveRegistry registry;
    return registry;
}

int Mesh::loop_start_vertex(const Element& el, std::size_t i) const {
    const SignedEdge& se = el.loop[i];
    const Edge& e = edges[se.edge];
    return se.reversed ? e.v1 : e.v0;
}

int Mesh::loop_end_vertex(const Element& el, std::size_t i) const {
    const SignedEdge& se = el.loop[i];
    const Edge& e = edges[se.edge];
    return se.reversed ? e.v0 : e.v1;
}

// --- curve evaluation -------------------------------------------------------

namespace {

void check_param(double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError("edge parameter t = " + std::to_string(t) + " outside [0,1]");
}

struct CurvePoint {
    Point2 p;
    Point2 d; // dF/dt
};

CurvePoint eval_curve(const CurveSpec& spec, double t) {
    if (const auto* line = std::get_if<LineSpec>(&spec)) {
        Point2 d = line->p1 - line->p0;
        return {line->p0 + t * d, d};
    }
    if (const auto* arc = std::get_if<ArcSpec>(&spec)) {
        double span = arc->theta1 - arc->theta0;
        double th = arc->theta0 + t * span;
        Point2 p = arc->center + arc->radius * Point2{std::cos(th), std::sin(th)};
        Point2 d = arc->radius * span * Point2{-std::sin(th), std::cos(th)};
        return {p, d};
    }
    const auto& graph = std::get<GraphSpec>(spec);
    const auto& entry = CurveRegistry::global().get(graph.curve_name);
    double dx = graph.x1 - graph.x0;
    double x = graph.x0 + t * dx;
    return {{x, entry.value(x)}, {dx, dx * entry.deriv(x)}};
}

} // namespace

Point2 point_at(const Edge& edge, double t) {
    check_param(t);
    return eval_curve(edge.geometry, t).p;
}

Point2 tangent_at(const Edge& edge, double t) {
    check_param(t);
    return eval_curve(edge.geometry, t).d;
}

Point2 outward_normal(const Edge& edge, double t, const Element& element) {
    auto it = std::find_if(element.loop.begin(), element.loop.end(),
                           [&](const SignedEdge& se) { return se.edge == edge.id; });
    if (it == element.loop.end())
        throw DomainError("outward_normal: edge " + std::to_string(edge.id) +
                          " not on element " + std::to_string(element.id));
    Point2 d = tangent_at(edge, t);
    double len = norm(d);
    if (len == 0.0)
        throw DomainError("outward_normal: degenerate curve (zero tangent) on edge " +
                          std::to_string(edge.id));
    double sign = it->reversed ? -1.0 : 1.0;
    // CCW loop keeps the interior on the left of travel; rotate the travel
    // tangent by -90 degrees to point outward.
    return (sign / len) * Point2{d.y, -d.x};
}

double arc_length(const Edge& edge) {
    auto integrate = [&](int n) {
        const GaussRule& rule = gauss_rule(n);
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            sum += rule.weights[i] * norm(eval_curve(edge.geometry, rule.nodes[i]).d);
        return sum;
    };
    double prev = integrate(4);
    for (int n = 8; n <= 32; n *= 2) {
        double cur = integrate(n);
        if (std::abs(cur - prev) <= 1e-12 * std::abs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

// --- mesh construction ------------------------------------------------------

namespace {

// x-directed flux integrals over a loop: area and first moments about c.
// Boundary reduction of the area integrals per the divergence theorem.
struct LowMoments {
    double m00 = 0, m10 = 0, m01 = 0;
};

LowMoments loop_moments(const std::vector<Edge>& edges, const std::vector<SignedEdge>& loop,
                        Point2 c) {
    LowMoments mom;
    for (const SignedEdge& se : loop) {
        const Edge& e = edges[se.edge];
        bool straight = std::holds_alternative<LineSpec>(e.geometry);
        int n = straight ? 4 : 16;
        const GaussRule& rule = gauss_rule(n);
        double dir = se.reversed ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) {
            CurvePoint cp = eval_curve(e.geometry, rule.nodes[i]);
            double w = dir * rule.weights[i] * cp.d.y; // n_x ds
            double xi = cp.p.x - c.x, eta = cp.p.y - c.y;
            mom.m00 += w * xi;
            mom.m10 += w * 0.5 * xi * xi;
            mom.m01 += w * xi * eta;
        }
    }
    return mom;
}

void check_edge_geometry(const Edge& e, const std::vector<Point2>& vertices,
                         const CurveRegistry& registry) {
    const std::string where = "edge " + std::to_string(e.id);
    if (const auto* arc = std::get_if<ArcSpec>(&e.geometry)) {
        if (!(arc->radius > 0.0)) throw ValidationError(where + ": arc radius must be positive");
        double span = std::abs(arc->theta1 - arc->theta0);
        if (span == 0.0) throw ValidationError(where + ": arc with theta0 == theta1");
        if (span >= M_PI)
            throw ValidationError(where + ": arc spans >= pi, split it into shorter edges");
    } else if (const auto* graph = std::get_if<GraphSpec>(&e.geometry)) {
        if (!registry.contains(graph->curve_name))
            throw ValidationError(where + ": unknown curve name '" + graph->curve_name + "'");
        if (graph->x0 == graph->x1) throw ValidationError(where + ": graph with x0 == x1");
    }
    Point2 a = point_at(e, 0.0), b = point_at(e, 1.0);
    double tol = 1e-12 * std::max(e.h_e, 1e-300);
    if (distance(a, vertices[e.v0]) > tol || distance(b, vertices[e.v1]) > tol)
        throw ValidationError(where + ": curve endpoints do not match its vertices");
}

} // namespace

Mesh build_mesh(std::vector<Point2> vertices, const std::vector<EdgeDef>& edge_defs,
                const std::vector<std::vector<SignedEdge>>& loops,
                const CurveRegistry& registry) {
    Mesh mesh;
    mesh.vertices = std::move(vertices);
    const int nv = static_cast<int>(mesh.vertices.size());

    mesh.edges.reserve(edge_defs.size());
    for (std::size_t i = 0; i < edge_defs.size(); ++i) {
        const EdgeDef& def = edge_defs[i];
        Edge e;
        e.id = static_cast<int>(i);
        e.v0 = def.v0;
        e.v1 = def.v1;
        if (e.v0 < 0 || e.v0 >= nv || e.v1 < 0 || e.v1 >= nv)
            throw ValidationError("edge " + std::to_string(e.id) + ": dangling vertex reference");
        e.geometry = def.geometry;
        // straight edges always take their endpoints from the vertex table
        if (std::holds_alternative<LineSpec>(e.geometry))
            e.geometry = LineSpec{mesh.vertices[e.v0], mesh.vertices[e.v1]};
        // resolve graph curves up front so a bad name is a validation error,
        // not a registry fault from the first point_at call
        if (const auto* graph = std::get_if<GraphSpec>(&e.geometry))
            if (!registry.contains(graph->curve_name))
                throw ValidationError("edge " + std::to_string(e.id) + ": unknown curve name '" +
                                      graph->curve_name + "'");
        e.h_e = arc_length(e);
        double chord = distance(mesh.vertices[e.v0], mesh.vertices[e.v1]);
        if (!(e.h_e > 0.0))
            throw ValidationError("edge " + std::to_string(e.id) + ": zero length");
        if (e.h_e < chord * (1.0 - 1e-12))
            throw ValidationError("edge " + std::to_string(e.id) +
                                  ": arc length shorter than chord");
        check_edge_geometry(e, mesh.vertices, registry);
        mesh.edges.push_back(std::move(e));
    }

    const int ne = static_cast<int>(mesh.edges.size());
    mesh.edge_uses.assign(ne, {});

    mesh.elements.reserve(loops.size());
    for (std::size_t ei = 0; ei < loops.size(); ++ei) {
        Element el;
        el.id = static_cast<int>(ei);
        el.loop = loops[ei];
        const std::string where = "element " + std::to_string(el.id);
        if (el.loop.size() < 3) throw ValidationError(where + ": loop has fewer than 3 edges");
        for (const SignedEdge& se : el.loop)
            if (se.edge < 0 || se.edge >= ne)
                throw ValidationError(where + ": dangling edge reference");

        Point2 c{0, 0};
        for (std::size_t i = 0; i < el.loop.size(); ++i) {
            std::size_t j = (i + 1) % el.loop.size();
            int end = mesh.loop_end_vertex(el, i);
            int start = mesh.loop_start_vertex(el, j);
            if (end != start)
                throw ValidationError(where + ": loop not closed between edges " +
                                      std::to_string(el.loop[i].edge) + " and " +
                                      std::to_string(el.loop[j].edge));
            Point2 v = mesh.vertices[mesh.loop_start_vertex(el, i)];
            c = c + (1.0 / el.loop.size()) * v;
        }

        LowMoments mom = loop_moments(mesh.edges, el.loop, c);
        if (!(mom.m00 > 0.0))
            throw ValidationError(where + ": nonpositive signed area, loop must be "
                                          "counterclockwise");
        el.area = mom.m00;
        el.x_T = c + Point2{mom.m10 / mom.m00, mom.m01 / mom.m00};

        // diameter over loop vertices plus samples along curved edges
        std::vector<Point2> pts;
        for (std::size_t i = 0; i < el.loop.size(); ++i) {
            pts.push_back(mesh.vertices[mesh.loop_start_vertex(el, i)]);
            const Edge& e = mesh.edges[el.loop[i].edge];
            if (!std::holds_alternative<LineSpec>(e.geometry))
                for (int s = 1; s <= 9; ++s) pts.push_back(point_at(e, 0.1 * s));
        }
        double diam = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                diam = std::max(diam, distance(pts[i], pts[j]));
        el.h_T = diam;

        for (const SignedEdge& se : el.loop)
            mesh.edge_uses[se.edge].push_back({el.id, se.reversed});
        mesh.elements.push_back(std::move(el));
    }

    for (int e = 0; e < ne; ++e) {
        const auto& uses = mesh.edge_uses[e];
        if (uses.empty())
            throw ValidationError("edge " + std::to_string(e) + ": referenced by no element");
        if (uses.size() > 2)
            throw ValidationError("edge " + std::to_string(e) +
                                  ": referenced by more than 2 elements");
        if (uses.size() == 2 && uses[0].reversed == uses[1].reversed)
            throw ValidationError("edge " + std::to_string(e) +
                                  ": shared by two elements with the same direction");
        mesh.edges[e].boundary = (uses.size() == 1);
    }

    mesh.h = 0.0;
    for (const Element& el : mesh.elements) mesh.h = std::max(mesh.h, el.h_T);
    return mesh;
}

RegularityReport validate(const Mesh& mesh) {
    RegularityReport rep;
    rep.min_area_ratio = std::numeric_limits<double>::infinity();
    rep.min_edge_ratio = std::numeric_limits<double>::infinity();
    rep.max_edge_ratio = 0.0;

    for (const Element& el : mesh.elements) {
        const std::string where = "element " + std::to_string(el.id);
        for (std::size_t i = 0; i < el.loop.size(); ++i) {
            std::size_t j = (i + 1) % el.loop.size();
            if (mesh.loop_end_vertex(el, i) != mesh.loop_start_vertex(el, j))
                throw ValidationError(where + ": loop not closed");
        }
        LowMoments mom = loop_moments(mesh.edges, el.loop, el.x_T);
        if (!(mom.m00 > 0.0))
            throw ValidationError(where + ": loop orientation is clockwise or area is zero");
        double ratio = el.area / (el.h_T * el.h_T);
        if (ratio < rep.min_area_ratio) {
            rep.min_area_ratio = ratio;
            rep.min_area_ratio_element = el.id;
        }
        for (const SignedEdge& se : el.loop) {
            double er = mesh.edges[se.edge].h_e / el.h_T;
            rep.min_edge_ratio = std::min(rep.min_edge_ratio, er);
            rep.max_edge_ratio = std::max(rep.max_edge_ratio, er);
        }
    }

    for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
        const auto& uses = mesh.edge_uses[e];
        bool ok = (uses.size() == 1 && mesh.edges[e].boundary) ||
                  (uses.size() == 2 && !mesh.edges[e].boundary &&
                   uses[0].reversed != uses[1].reversed);
        if (!ok)
            throw ValidationError("edge " + std::to_string(e) + ": inconsistent element sharing");
    }

    rep.loops_closed = true;
    rep.orientation_ok = true;
    rep.edge_sharing_ok = true;
    return rep;
}

} // namespace wg
