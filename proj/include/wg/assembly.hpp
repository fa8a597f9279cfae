#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "wg/sparse.hpp"
#include "wg/wg_space.hpp"

namespace wg {

// Global DOF numbering: one interior block of dim P_k coefficients per
// element, then one block of k trace coefficients per edge. Edge blocks are
// shared by both neighbors (the trace parameter follows the stored edge
// direction); boundary-edge slots carry Dirichlet data.
struct WGDofMap {
    int k = 1;
    int dim_interior = 0; // dim P_k
    int n_elements = 0;
    int n_edges = 0;
    int total = 0;
    int n_free = 0;
    std::vector<char> dirichlet;  // size total
    std::vector<int> free_index;  // global slot -> free index, -1 when Dirichlet

    int interior_dof(int element, int j) const { return element * dim_interior + j; }
    int edge_dof(int edge, int m) const { return n_elements * dim_interior + edge * k + m; }
};

WGDofMap build_dof_map(const Mesh& mesh, int k);

// Coefficient vector over every slot of the map (interior + edge blocks).
struct WeakFunction {
    std::vector<double> coef;
};

struct SparseSystem {
    WGDofMap map;
    SparseMatrix A;                       // free x free, SPD
    std::vector<double> b;                // free
    std::vector<double> dirichlet_values; // size total, zero on free slots
    SparseMatrix A_full; // unconstrained total x total; built only on request
};

// Element stiffness G' M G and the rho-weighted stabilizer; both symmetric
// positive semidefinite with the constant weak function spanning the joint
// kernel.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> local_matrices(const Mesh& mesh,
                                                           const Element& element, int k);

// Load vector: (f, phi_i) on interior slots by fan quadrature, zero on edge
// slots.
Eigen::VectorXd local_load(const Mesh& mesh, const Element& element, int k,
                           const std::function<double(Point2)>& f);

// Full pipeline for -laplace u = f with u = g on the boundary: boundary edge
// DOFs are set to the weighted projection of g and eliminated symmetrically.
// Element blocks are computed in parallel, scattered in element order.
SparseSystem assemble(const Mesh& mesh, int k, const std::function<double(Point2)>& f,
                      const std::function<double(Point2)>& g, double rho = 1.0,
                      bool keep_full = false);

// ||A x - b|| / ||b|| on the free system.
double solution_norm_check(const std::vector<double>& x, const SparseSystem& system);

// Solved free DOFs + stored Dirichlet values -> full coefficient vector.
WeakFunction expand_solution(const SparseSystem& system, const std::vector<double>& x_free);

// Restriction of a full coefficient vector to one element's local layout.
Eigen::VectorXd local_coefficients(const WGDofMap& map, const Mesh& mesh,
                                   const Element& element, const WeakFunction& v);

// Triplet dump of the free system ("i j value" lines plus the right-hand
// side), 17 significant digits.
void dump_system(std::ostream& out, const SparseSystem& system);

} // namespace wg
