#include "wg/linear_solver.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "wg/errors.hpp"

namespace wg {

namespace {

double norm2(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x * x;
    return std::sqrt(sum);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

} // namespace

CgResult try_solve_cg(const SparseMatrix& A, const std::vector<double>& b, double tol,
                      int maxiter, const std::vector<double>* x0) {
    const int n = A.rows();
    if (A.cols() != n || static_cast<int>(b.size()) != n)
        throw DomainError("solve_cg: dimension mismatch");
    if (maxiter < 0) maxiter = static_cast<int>(20.0 * std::sqrt(double(n))) + 200;

    CgResult res;
    res.x.assign(n, 0.0);
    if (n == 0) {
        res.report.converged = true;
        return res;
    }

    std::vector<double> inv_diag = A.diagonal();
    for (int i = 0; i < n; ++i) {
        if (!(inv_diag[i] > 0.0))
            throw SolverError("matrix diagonal entry " + std::to_string(i) +
                              " is not positive; system is not positive definite");
        inv_diag[i] = 1.0 / inv_diag[i];
    }

    const double bnorm = norm2(b);
    if (bnorm == 0.0) {
        res.report.converged = true;
        return res;
    }
    if (x0) {
        if (x0->size() != b.size()) throw DomainError("solve_cg: initial guess size mismatch");
        res.x = *x0;
    }

    // Conjugate residual flavor: minimizing sqrt(r' M^-1 r) over the growing
    // Krylov space keeps the recorded history nonincreasing, which plain CG
    // does not guarantee.
    std::vector<double> r(n), z(n), w(n), p(n), q(n), s(n);
    A.multiply(res.x, r);
    for (int i = 0; i < n; ++i) r[i] = b[i] - r[i];
    double rz = 0.0;
    for (int i = 0; i < n; ++i) {
        z[i] = inv_diag[i] * r[i];
        rz += r[i] * z[i];
    }
    res.report.residual = norm2(r) / bnorm;
    res.report.residual_history.push_back(std::sqrt(std::max(rz, 0.0)));
    if (res.report.residual <= tol) {
        res.report.converged = true;
        return res;
    }

    A.multiply(z, w);
    double zaz = 0.0;
    for (int i = 0; i < n; ++i) zaz += z[i] * w[i];
    p = z;

    for (int it = 1; it <= maxiter; ++it) {
        if (!(zaz > 0.0))
            throw SolverError("nonpositive curvature at iteration " + std::to_string(it) +
                              "; system is not positive definite");
        // A p is recomputed rather than carried by recurrence: the extra
        // matvec keeps the recursive residual honest near the roundoff floor
        A.multiply(p, q);
        double qs = 0.0;
        for (int i = 0; i < n; ++i) {
            s[i] = inv_diag[i] * q[i];
            qs += q[i] * s[i];
        }
        if (!(qs > 0.0))
            throw SolverError("search direction collapsed at iteration " + std::to_string(it) +
                              "; system is singular or not positive definite");
        const double alpha = zaz / qs;
        double rz_next = 0.0;
        for (int i = 0; i < n; ++i) {
            res.x[i] += alpha * p[i];
            r[i] -= alpha * q[i];
            z[i] = inv_diag[i] * r[i];
            rz_next += r[i] * z[i];
        }
        res.report.iterations = it;
        res.report.residual = norm2(r) / bnorm;
        res.report.residual_history.push_back(std::sqrt(std::max(rz_next, 0.0)));
        if (res.report.residual <= tol) {
            res.report.converged = true;
            return res;
        }
        A.multiply(z, w);
        double zaz_next = 0.0;
        for (int i = 0; i < n; ++i) zaz_next += z[i] * w[i];
        const double beta = zaz_next / zaz;
        zaz = zaz_next;
        for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }
    return res;
}

CgResult solve_cg(const SparseMatrix& A, const std::vector<double>& b, double tol, int maxiter,
                  const std::vector<double>* x0) {
    CgResult res = try_solve_cg(A, b, tol, maxiter, x0);
    if (!res.report.converged)
        throw SolverError("solver stalled at relative residual " +
                          fmt(res.report.residual) + " after " +
                          std::to_string(res.report.iterations) + " iterations (tol " +
                          fmt(tol) + ")");
    return res;
}

} // namespace wg
