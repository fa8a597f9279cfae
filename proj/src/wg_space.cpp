#include "wg/wg_space.hpp"

#include <cmath>

namespace wg {

Eigen::MatrixXd spd_solve(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    if (llt.info() == Eigen::Success) return llt.solve(B);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (!qr.isInvertible())
        throw DomainError("mass matrix numerically singular (rank " +
                          std::to_string(qr.rank()) + " of " + std::to_string(A.rows()) +
                          "); element basis badly conditioned");
    return qr.solve(B);
}

Eigen::MatrixXd interior_mass(const MomentTable& moments, int k) {
    if (moments.degree < 2 * k)
        throw DomainError("interior_mass: moment table degree " +
                          std::to_string(moments.degree) + " < 2k");
    const auto mono = monomials(k);
    const int dim = poly_dim(k);
    Eigen::MatrixXd M(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            M(i, j) = moments.at(mono[i].a + mono[j].a, mono[i].b + mono[j].b);
    return M;
}

Eigen::MatrixXd edge_weighted_mass(const Edge& edge, int k) {
    EdgeQuad q = edge_quad(edge, edge_rule_size(edge, 2 * k));
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < q.n; ++i) {
        double w = q.w[i] * norm(q.d[i]);
        double tp = 1.0;
        std::vector<double> pow(2 * k - 1);
        for (int p = 0; p < 2 * k - 1; ++p) {
            pow[p] = tp;
            tp *= q.t[i];
        }
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) W(a, b) += w * pow[a + b];
    }
    return W;
}

namespace {

int loop_size(const Element& el) { return static_cast<int>(el.loop.size()); }

// <t^m, q_r . n>_e columns of the duality right-hand side, and the
// interior-trace moment matrix P_e for Q_b, share this node loop.
struct EdgeScan {
    EdgeQuad q;
    double dir;
    const Edge* edge;
};

EdgeScan scan_edge(const Mesh& mesh, const SignedEdge& se, int degree) {
    const Edge& edge = mesh.edges[se.edge];
    return {edge_quad(edge, edge_rule_size(edge, degree)), se.reversed ? -1.0 : 1.0, &edge};
}

} // namespace

ElementOperators build_element_operators(const Mesh& mesh, const Element& element, int k) {
    if (k < 1) throw DomainError("WG order k must be >= 1");
    ElementOperators ops;
    ops.k = k;
    ops.element = element.id;
    const int dimk = poly_dim(k);
    const int dimk1 = poly_dim(k - 1);
    const int ne = loop_size(element);
    ops.nloc = dimk + ne * k;

    ops.moments = element_moments(mesh, element, 2 * k);
    ops.Mk = interior_mass(ops.moments, k);
    ops.Mk1 = interior_mass(ops.moments, k - 1);

    const auto mk = monomials(k);
    const auto mk1 = monomials(k - 1);
    const double h = element.h_T;

    ops.Dx = Eigen::MatrixXd::Zero(dimk1, dimk);
    ops.Dy = Eigen::MatrixXd::Zero(dimk1, dimk);
    for (int j = 0; j < dimk; ++j) {
        if (mk[j].a > 0) ops.Dx(mono_index(mk[j].a - 1, mk[j].b), j) = mk[j].a / h;
        if (mk[j].b > 0) ops.Dy(mono_index(mk[j].a, mk[j].b - 1), j) = mk[j].b / h;
    }

    // duality right-hand side: rows are the 2*dimk1 gradient test functions
    // (phi_r, 0), (0, phi_r)
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(2 * dimk1, ops.nloc);
    for (int r = 0; r < dimk1; ++r) {
        const int ar = mk1[r].a, br = mk1[r].b;
        for (int j = 0; j < dimk; ++j) {
            if (ar > 0)
                B(r, j) -= (ar / h) * ops.moments.at(mk[j].a + ar - 1, mk[j].b + br);
            if (br > 0)
                B(dimk1 + r, j) -= (br / h) * ops.moments.at(mk[j].a + ar, mk[j].b + br - 1);
        }
    }
    std::vector<double> phi, tpow(k);
    for (int le = 0; le < ne; ++le) {
        EdgeScan es = scan_edge(mesh, element.loop[le], 2 * k);
        const int col = ops.edge_offset(le);
        for (int i = 0; i < es.q.n; ++i) {
            eval_basis(k - 1, es.q.p[i], element.x_T, h, phi);
            double tp = 1.0;
            for (int m = 0; m < k; ++m) {
                tpow[m] = tp;
                tp *= es.q.t[i];
            }
            // n ds = dir * (y', -x') dt
            const double wx = es.dir * es.q.w[i] * es.q.d[i].y;
            const double wy = -es.dir * es.q.w[i] * es.q.d[i].x;
            for (int r = 0; r < dimk1; ++r)
                for (int m = 0; m < k; ++m) {
                    B(r, col + m) += wx * phi[r] * tpow[m];
                    B(dimk1 + r, col + m) += wy * phi[r] * tpow[m];
                }
        }
    }
    ops.G.resize(2 * dimk1, ops.nloc);
    ops.G.topRows(dimk1) = spd_solve(ops.Mk1, B.topRows(dimk1));
    ops.G.bottomRows(dimk1) = spd_solve(ops.Mk1, B.bottomRows(dimk1));

    ops.A = ops.G.topRows(dimk1).transpose() * ops.Mk1 * ops.G.topRows(dimk1) +
            ops.G.bottomRows(dimk1).transpose() * ops.Mk1 * ops.G.bottomRows(dimk1);
    ops.A = 0.5 * (ops.A + ops.A.transpose().eval());

    ops.W.reserve(ne);
    ops.R.reserve(ne);
    ops.S = Eigen::MatrixXd::Zero(ops.nloc, ops.nloc);
    for (int le = 0; le < ne; ++le) {
        EdgeScan es = scan_edge(mesh, element.loop[le], 2 * k);
        Eigen::MatrixXd W = Eigen::MatrixXd::Zero(k, k);
        Eigen::MatrixXd P = Eigen::MatrixXd::Zero(k, dimk);
        for (int i = 0; i < es.q.n; ++i) {
            const double w = es.q.w[i] * norm(es.q.d[i]);
            eval_basis(k, es.q.p[i], element.x_T, h, phi);
            double tp = 1.0;
            for (int m = 0; m < k; ++m) {
                tpow[m] = tp;
                tp *= es.q.t[i];
            }
            for (int m = 0; m < k; ++m) {
                for (int n = 0; n < k; ++n) W(m, n) += w * tpow[m] * tpow[n];
                for (int j = 0; j < dimk; ++j) P(m, j) += w * tpow[m] * phi[j];
            }
        }
        Eigen::MatrixXd R = spd_solve(W, P);
        // D maps local DOFs to the edge-basis coefficients of Q_b v0 - v_b
        Eigen::MatrixXd D = Eigen::MatrixXd::Zero(k, ops.nloc);
        D.leftCols(dimk) = R;
        D.block(0, ops.edge_offset(le), k, k) = -Eigen::MatrixXd::Identity(k, k);
        ops.S += (1.0 / h) * D.transpose() * W * D;
        ops.W.push_back(std::move(W));
        ops.R.push_back(std::move(R));
    }
    ops.S = 0.5 * (ops.S + ops.S.transpose().eval());
    return ops;
}

Eigen::MatrixXd weak_gradient_matrix(const Mesh& mesh, const Element& element, int k) {
    return build_element_operators(mesh, element, k).G;
}

Eigen::VectorXd project_Q0(const Mesh& mesh, const Element& element, int k,
                           const std::function<double(Point2)>& f) {
    const int dim = poly_dim(k);
    const auto mono = monomials(k);
    Eigen::VectorXd rhs(dim);
    for (int i = 0; i < dim; ++i) {
        const Mono m = mono[i];
        rhs(i) = fan_quadrature(mesh, element, [&](Point2 p) {
            double xi = (p.x - element.x_T.x) / element.h_T;
            double eta = (p.y - element.x_T.y) / element.h_T;
            double v = f(p);
            for (int q = 0; q < m.a; ++q) v *= xi;
            for (int q = 0; q < m.b; ++q) v *= eta;
            return v;
        });
    }
    MomentTable moments = element_moments(mesh, element, 2 * k);
    return spd_solve(interior_mass(moments, k), rhs);
}

Eigen::VectorXd project_Qb(const Edge& edge, int k,
                           const std::function<double(Point2)>& g) {
    EdgeQuad q = edge_quad(edge, 16);
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(k, k);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k);
    for (int i = 0; i < q.n; ++i) {
        const double w = q.w[i] * norm(q.d[i]);
        const double gv = g(q.p[i]);
        double tm = 1.0;
        std::vector<double> pow(k);
        for (int m = 0; m < k; ++m) {
            pow[m] = tm;
            tm *= q.t[i];
        }
        for (int m = 0; m < k; ++m) {
            rhs(m) += w * gv * pow[m];
            for (int n = 0; n < k; ++n) W(m, n) += w * pow[m] * pow[n];
        }
    }
    return spd_solve(W, rhs);
}

Eigen::VectorXd project_gradient(const Mesh& mesh, const Element& element, int k,
                                 const std::function<Point2(Point2)>& w) {
    Eigen::VectorXd cx =
        project_Q0(mesh, element, k - 1, [&](Point2 p) { return w(p).x; });
    Eigen::VectorXd cy =
        project_Q0(mesh, element, k - 1, [&](Point2 p) { return w(p).y; });
    Eigen::VectorXd out(cx.size() + cy.size());
    out << cx, cy;
    return out;
}

} // namespace wg
