#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "wg/basis.hpp"
#include "wg/quadrature.hpp"

namespace wg {

// Solve A X = B for symmetric positive definite A: Cholesky first, and on
// failure column-pivoted QR (near-degenerate elements stress the monomial
// Gram matrices). Throws DomainError if the matrix is numerically singular.
Eigen::MatrixXd spd_solve(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

// Gram matrix of the scaled monomial basis of P_k on the element the moments
// describe; needs the table filled to degree 2k.
Eigen::MatrixXd interior_mass(const MomentTable& moments, int k);

// Gram matrix of the edge trace basis {1, t, ..., t^(k-1)} weighted by the
// arc-length Jacobian |F'(t)|; k x k.
Eigen::MatrixXd edge_weighted_mass(const Edge& edge, int k);

// Everything local assembly and error evaluation need about one element,
// for order-k WG: W(k,T) couples v0 in P_k(T) with one trace polynomial of
// degree k-1 per edge. Local DOF layout: dim P_k interior coefficients
// first, then k trace coefficients per edge in loop order; trace parameter t
// always runs along the stored edge direction, so both sides of a shared
// edge address the same coefficients.
struct ElementOperators {
    int k = 1;
    int element = -1;
    int nloc = 0;
    MomentTable moments; // degree 2k, about (x_T, h_T)

    Eigen::MatrixXd Mk;  // interior mass, order k
    Eigen::MatrixXd Mk1; // interior mass, order k-1
    Eigen::MatrixXd Dx;  // coefficient map P_k -> P_{k-1} of d/dx
    Eigen::MatrixXd Dy;

    // weak gradient: local DOFs -> stacked (x; y) coefficients of
    // grad_w v in [P_{k-1}(T)]^2
    Eigen::MatrixXd G;

    Eigen::MatrixXd A; // G^T blockdiag(Mk1, Mk1) G
    Eigen::MatrixXd S; // stabilizer, rho = 1

    std::vector<Eigen::MatrixXd> W; // per loop edge: weighted edge mass, k x k
    std::vector<Eigen::MatrixXd> R; // per loop edge: Q_b of the interior trace, k x dim P_k

    int interior_dim() const { return poly_dim(k); }
    int edge_offset(int loop_edge) const { return poly_dim(k) + loop_edge * k; }
};

ElementOperators build_element_operators(const Mesh& mesh, const Element& element, int k);

// The weak gradient alone, via the duality definition: row block r of the
// right-hand side is -(v0, div q_r)_T + sum over edges of <v_b, q_r . n>.
Eigen::MatrixXd weak_gradient_matrix(const Mesh& mesh, const Element& element, int k);

// L² projection onto P_k(T); non-polynomial integrands handled by
// fan_quadrature.
Eigen::VectorXd project_Q0(const Mesh& mesh, const Element& element, int k,
                           const std::function<double(Point2)>& f);

// Jacobian-weighted L² projection onto the edge trace basis (k coefficients);
// reduces to the plain L² projection onto P_{k-1}(e) on straight edges.
Eigen::VectorXd project_Qb(const Edge& edge, int k,
                           const std::function<double(Point2)>& g);

// Componentwise L² projection of a vector field onto [P_{k-1}(T)]^2, stacked
// (x coefficients; y coefficients).
Eigen::VectorXd project_gradient(const Mesh& mesh, const Element& element, int k,
                                 const std::function<Point2(Point2)>& w);

} // namespace wg
