#pragma once

#include <functional>
#include <vector>

#include "wg/geometry.hpp"

namespace wg {

// Gauss data pulled back to one edge: parameter values, weights, points and
// tangents dF/dt at the nodes.
struct EdgeQuad {
    int n = 0;
    std::vector<double> t;
    std::vector<double> w;
    std::vector<Point2> p;
    std::vector<Point2> d;
};

EdgeQuad edge_quad(const Edge& edge, int n);

// Points needed to integrate a pullback of polynomial degree `d` along an
// edge: exact rules for straight edges, over-resolved rules for curved ones
// (their pullbacks are analytic but not polynomial).
int edge_rule_size(const Edge& edge, int d);

// Integral of f over the edge against arc length, n-point rule.
double edge_integral(const Edge& edge, const std::function<double(Point2)>& f, int n);

// Scaled monomial moments m_ab = integral over T of xi^a eta^b, with
// xi = (x - center.x)/scale, eta = (y - center.y)/scale, for a + b <= degree.
// Stored degree-lexicographically: (0,0), (1,0), (0,1), (2,0), (1,1), ...
struct MomentTable {
    int degree = 0;
    Point2 center;
    double scale = 1.0;
    std::vector<double> m;

    static int index(int a, int b) {
        int d = a + b;
        return d * (d + 1) / 2 + (d - a);
    }
    double at(int a, int b) const { return m[index(a, b)]; }
    double& at(int a, int b) { return m[index(a, b)]; }
};

// Moments by reduction to the element boundary via the divergence theorem:
// the x-directed flux P = scale * xi^(a+1) eta^b / (a+1) has dP/dx =
// xi^a eta^b, so m_ab is a sum of edge integrals of P against n_x ds. With
// `y_flux` the y-directed antiderivative is used instead; the two must agree,
// which makes a useful independence check. Exact for straight edges,
// converged well past 1e-12 for the curved kinds used here.
MomentTable moments_about(const Mesh& mesh, const Element& element, Point2 center, double scale,
                          int degree, bool y_flux = false);

// Moments about the element's own centroid at scale h_T, the form every
// element-level operator consumes.
MomentTable element_moments(const Mesh& mesh, const Element& element, int degree,
                            bool y_flux = false);

// Integral of f over the element by fanning it from x_T: each edge spans a
// curved sector {x_T + lambda (F_e(t) - x_T)} with an n x n tensor Gauss
// rule. Requires the element star-shaped with respect to x_T; a negative
// Jacobian at any node throws DomainError.
double fan_quadrature(const Mesh& mesh, const Element& element,
                      const std::function<double(Point2)>& f, int n = 12);

} // namespace wg
