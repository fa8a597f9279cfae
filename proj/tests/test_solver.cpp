#include <cmath>

#include "doctest.h"
#include "support/oracles.hpp"
#include "wg/linear_solver.hpp"
#include "wg/sparse.hpp"

using namespace wg;

namespace {

SparseMatrix matrix2(double a00, double a01, double a10, double a11) {
    return SparseMatrix(2, 2, {{0, 0, a00}, {0, 1, a01}, {1, 0, a10}, {1, 1, a11}});
}

// dense SPD test matrix: diagonally dominant with off-diagonal coupling
SparseMatrix laplacian1d(int n) {
    std::vector<Triplet> t;
    for (int i = 0; i < n; ++i) {
        t.push_back({i, i, 2.0});
        if (i > 0) t.push_back({i, i - 1, -1.0});
        if (i + 1 < n) t.push_back({i, i + 1, -1.0});
    }
    return SparseMatrix(n, n, std::move(t));
}

} // namespace

TEST_SUITE("solver") {

TEST_CASE("sparse matrix sums duplicate triplets in deterministic order") {
    SparseMatrix A(2, 2, {{0, 0, 1.0}, {1, 1, 2.0}, {0, 0, 0.5}, {0, 1, 4.0}, {0, 0, 0.25}});
    CHECK(A.nonzeros() == 3);
    CHECK(A.coeff(0, 0) == 1.75);
    CHECK(A.coeff(0, 1) == 4.0);
    CHECK(A.coeff(1, 0) == 0.0);
    CHECK(A.coeff(1, 1) == 2.0);

    std::vector<double> y = A.multiply({1.0, 10.0});
    CHECK(y[0] == doctest::Approx(41.75).epsilon(1e-15));
    CHECK(y[1] == doctest::Approx(20.0).epsilon(1e-15));

    std::vector<double> d = A.diagonal();
    CHECK(d[0] == 1.75);
    CHECK(d[1] == 2.0);

    CHECK_THROWS_AS(SparseMatrix(2, 2, {{2, 0, 1.0}}), DomainError);
    CHECK_THROWS_AS(A.multiply(std::vector<double>{1.0, 2.0, 3.0}), DomainError);
}

TEST_CASE("cg solves the hand-eliminated 2x2 system") {
    SparseMatrix A = matrix2(4, 1, 1, 3);
    CgResult r = solve_cg(A, {1.0, 2.0});
    CHECK(r.report.converged);
    CHECK(r.x[0] == doctest::Approx(1.0 / 11).epsilon(1e-11));
    CHECK(r.x[1] == doctest::Approx(7.0 / 11).epsilon(1e-11));
    CHECK(r.report.residual <= 1e-12);
}

TEST_CASE("identity converges immediately, jacobi flattens a wild diagonal") {
    SparseMatrix I(3, 3, {{0, 0, 1.0}, {1, 1, 1.0}, {2, 2, 1.0}});
    CgResult r = solve_cg(I, {3.0, -1.0, 0.5});
    CHECK(r.report.iterations <= 1);
    CHECK(r.x[0] == doctest::Approx(3.0).epsilon(1e-13));

    SparseMatrix D(2, 2, {{0, 0, 1.0}, {1, 1, 1e6}});
    CgResult rd = solve_cg(D, {2.0, 3.0});
    CHECK(rd.report.converged);
    CHECK(rd.report.iterations <= 3);
    CHECK(rd.x[1] == doctest::Approx(3e-6).epsilon(1e-11));
}

TEST_CASE("preconditioned residual history decreases monotonically") {
    SparseMatrix A = laplacian1d(60);
    std::vector<double> b(60);
    oracle::Rng rng(99);
    for (double& v : b) v = rng.uniform(-1.0, 1.0);
    CgResult r = solve_cg(A, b, 1e-12);
    CHECK(r.report.converged);
    REQUIRE(r.report.residual_history.size() >= 2);
    for (std::size_t i = 1; i < r.report.residual_history.size(); ++i)
        CHECK(r.report.residual_history[i] <=
              r.report.residual_history[i - 1] + 1e-13);
}

TEST_CASE("solution is independent of the starting vector") {
    SparseMatrix A = laplacian1d(40);
    std::vector<double> b(40, 1.0);
    CgResult cold = solve_cg(A, b, 1e-12);
    oracle::Rng rng(7);
    std::vector<double> x0(40);
    for (double& v : x0) v = rng.uniform(-5.0, 5.0);
    CgResult warm = solve_cg(A, b, 1e-12, -1, &x0);
    double diff = 0.0, scale = 0.0;
    for (int i = 0; i < 40; ++i) {
        diff = std::max(diff, std::abs(cold.x[i] - warm.x[i]));
        scale = std::max(scale, std::abs(cold.x[i]));
    }
    CHECK(diff <= 10 * 1e-12 * scale);
}

TEST_CASE("an exact starting vector needs no iterations") {
    SparseMatrix A = matrix2(4, 1, 1, 3);
    std::vector<double> x0 = {1.0 / 11, 7.0 / 11};
    CgResult r = solve_cg(A, {1.0, 2.0}, 1e-12, -1, &x0);
    CHECK(r.report.converged);
    CHECK(r.report.iterations == 0);
}

TEST_CASE("zero right-hand side returns zero") {
    SparseMatrix A = laplacian1d(10);
    CgResult r = solve_cg(A, std::vector<double>(10, 0.0));
    CHECK(r.report.converged);
    for (double v : r.x) CHECK(v == 0.0);
}

TEST_CASE("failure modes: bad diagonal, indefinite matrix, iteration cap, sizes") {
    SparseMatrix zero_diag(2, 2, {{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0}});
    CHECK_THROWS_WITH_AS(solve_cg(zero_diag, {1.0, 1.0}),
                         doctest::Contains("diagonal"), SolverError);

    SparseMatrix indefinite = matrix2(1, 2, 2, 1); // eigenvalues 3, -1
    CHECK_THROWS_WITH_AS(solve_cg(indefinite, {1.0, -1.0}),
                         doctest::Contains("curvature"), SolverError);

    SparseMatrix A = laplacian1d(50);
    std::vector<double> b(50, 1.0);
    CgResult capped = try_solve_cg(A, b, 1e-14, 1);
    CHECK_FALSE(capped.report.converged);
    CHECK(capped.report.iterations == 1);
    CHECK_THROWS_WITH_AS(solve_cg(A, b, 1e-14, 1), doctest::Contains("stalled"),
                         SolverError);

    CHECK_THROWS_AS(solve_cg(A, std::vector<double>(49, 1.0)), DomainError);
    std::vector<double> x0(49, 0.0);
    CHECK_THROWS_AS(solve_cg(A, b, 1e-12, -1, &x0), DomainError);
}

TEST_CASE("report invariants: converged implies the tolerance was met") {
    SparseMatrix A = laplacian1d(30);
    std::vector<double> b(30, 0.25);
    CgResult r = solve_cg(A, b, 1e-10);
    CHECK(r.report.converged);
    CHECK(r.report.residual <= 1e-10);
    std::vector<double> res = A.multiply(r.x);
    double rn = 0.0, bn = 0.0;
    for (int i = 0; i < 30; ++i) {
        rn += (res[i] - b[i]) * (res[i] - b[i]);
        bn += b[i] * b[i];
    }
    CHECK(std::sqrt(rn / bn) <= 1e-10);
}

} // TEST_SUITE
