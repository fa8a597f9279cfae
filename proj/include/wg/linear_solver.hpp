#pragma once

#include <vector>

#include "wg/sparse.hpp"

namespace wg {

struct SolveReport {
    int iterations = 0;
    double residual = 0.0; // final ||Ax - b|| / ||b||
    bool converged = false;
    // preconditioned residual norm sqrt(r' M^-1 r) after each iteration
    std::vector<double> residual_history;
};

struct CgResult {
    std::vector<double> x;
    SolveReport report;
};

// Jacobi-preconditioned conjugate residual iteration for symmetric positive
// definite A: each step minimizes the preconditioned residual norm over the
// Krylov space, so residual_history never increases. Stops when
// ||Ax - b|| / ||b|| <= tol. maxiter < 0 picks the default 20 sqrt(n) + 200.
// Throws SolverError on a nonpositive diagonal or when a search direction has
// nonpositive curvature (A not positive definite); a plain failure to reach
// tol within maxiter is reported, not thrown.
CgResult try_solve_cg(const SparseMatrix& A, const std::vector<double>& b, double tol = 1e-12,
                      int maxiter = -1, const std::vector<double>* x0 = nullptr);

// As above, but non-convergence throws SolverError (message carries the
// iteration count and final residual).
CgResult solve_cg(const SparseMatrix& A, const std::vector<double>& b, double tol = 1e-12,
                  int maxiter = -1, const std::vector<double>* x0 = nullptr);

} // namespace wg
