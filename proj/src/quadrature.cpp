#include "wg/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "wg/gauss.hpp"

namespace wg {

EdgeQuad edge_quad(const Edge& edge, int n) {
    const GaussRule& rule = gauss_rule(n);
    EdgeQuad q;
    q.n = n;
    q.t = rule.nodes;
    q.w = rule.weights;
    q.p.resize(n);
    q.d.resize(n);
    for (int i = 0; i < n; ++i) {
        q.p[i] = point_at(edge, q.t[i]);
        q.d[i] = tangent_at(edge, q.t[i]);
    }
    return q;
}

int edge_rule_size(const Edge& edge, int d) {
    bool straight = std::holds_alternative<LineSpec>(edge.geometry);
    int n = straight ? d + 1 : std::max(d + 6, 12);
    return std::clamp(n, 1, 32);
}

double edge_integral(const Edge& edge, const std::function<double(Point2)>& f, int n) {
    EdgeQuad q = edge_quad(edge, n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += q.w[i] * f(q.p[i]) * norm(q.d[i]);
    return sum;
}

MomentTable moments_about(const Mesh& mesh, const Element& element, Point2 center, double scale,
                          int degree, bool y_flux) {
    MomentTable tab;
    tab.degree = degree;
    tab.center = center;
    tab.scale = scale;
    tab.m.assign((degree + 1) * (degree + 2) / 2, 0.0);

    // flux polynomials have degree (a+b)+1
    std::vector<double> xp(degree + 2), yp(degree + 2);
    for (const SignedEdge& se : element.loop) {
        const Edge& edge = mesh.edges[se.edge];
        double dir = se.reversed ? -1.0 : 1.0;
        EdgeQuad q = edge_quad(edge, edge_rule_size(edge, degree + 1));
        for (int i = 0; i < q.n; ++i) {
            double xi = (q.p[i].x - center.x) / scale;
            double eta = (q.p[i].y - center.y) / scale;
            xp[0] = yp[0] = 1.0;
            for (int p = 1; p <= degree + 1; ++p) {
                xp[p] = xp[p - 1] * xi;
                yp[p] = yp[p - 1] * eta;
            }
            // n ds = dir * (y', -x') dt
            double wx = dir * q.w[i] * q.d[i].y * scale;
            double wy = -dir * q.w[i] * q.d[i].x * scale;
            for (int a = 0; a <= degree; ++a)
                for (int b = 0; a + b <= degree; ++b)
                    tab.at(a, b) += y_flux ? wy * xp[a] * yp[b + 1] / (b + 1)
                                           : wx * xp[a + 1] * yp[b] / (a + 1);
        }
    }
    return tab;
}

MomentTable element_moments(const Mesh& mesh, const Element& element, int degree, bool y_flux) {
    return moments_about(mesh, element, element.x_T, element.h_T, degree, y_flux);
}

double fan_quadrature(const Mesh& mesh, const Element& element,
                      const std::function<double(Point2)>& f, int n) {
    const GaussRule& rule = gauss_rule(n);
    double sum = 0.0;
    for (const SignedEdge& se : element.loop) {
        const Edge& edge = mesh.edges[se.edge];
        double dir = se.reversed ? -1.0 : 1.0;
        EdgeQuad q = edge_quad(edge, n);
        for (int i = 0; i < n; ++i) {
            Point2 r = q.p[i] - element.x_T;
            double jac = dir * cross(r, q.d[i]);
            if (jac < -1e-12 * element.h_T * element.h_T)
                throw DomainError("fan_quadrature: element " + std::to_string(element.id) +
                                  " is not star-shaped about its centroid");
            for (int j = 0; j < n; ++j) {
                double lam = rule.nodes[j];
                sum += q.w[i] * rule.weights[j] * lam * jac * f(element.x_T + lam * r);
            }
        }
    }
    return sum;
}

} // namespace wg
