#include <cmath>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "wg/error_analysis.hpp"
#include "wg/linear_solver.hpp"
#include "wg/testcases.hpp"

using namespace wg;

namespace {

StudyRow row(int level, double h, double energy, double l2, double eb, double h1) {
    StudyRow r;
    r.level = level;
    r.h = h;
    r.dofs = 100 * level * level;
    r.err.energy = energy;
    r.err.l2_interior = l2;
    r.err.l2_edge = eb;
    r.err.h1_broken = h1;
    return r;
}

} // namespace

TEST_SUITE("error_analysis") {

TEST_CASE("project_exact: polynomial traces and constants are reproduced") {
    Mesh mesh = unit_square_mesh(2);
    auto u = [](Point2 p) { return 1.0 + 2.0 * p.x - 3.0 * p.y; };
    WeakFunction proj = project_exact(mesh, 2, u);
    WGDofMap map = build_dof_map(mesh, 2);
    for (const Element& el : mesh.elements) {
        std::vector<double> c(map.dim_interior);
        for (int j = 0; j < map.dim_interior; ++j) c[j] = proj.coef[map.interior_dof(el.id, j)];
        for (Point2 p : {el.x_T, Point2{0.1, 0.9}})
            CHECK(eval_poly(2, c.data(), p, el.x_T, el.h_T) == doctest::Approx(u(p)).epsilon(1e-12));
    }
    for (const Edge& e : mesh.edges) {
        double t = 0.3;
        double vb = proj.coef[map.edge_dof(e.id, 0)] + proj.coef[map.edge_dof(e.id, 1)] * t;
        CHECK(vb == doctest::Approx(u(point_at(e, t))).epsilon(1e-12));
    }

    WeakFunction constant = project_exact(mesh, 2, [](Point2) { return 4.25; });
    for (int el = 0; el < map.n_elements; ++el) {
        CHECK(constant.coef[map.interior_dof(el, 0)] == doctest::Approx(4.25).epsilon(1e-13));
        for (int j = 1; j < map.dim_interior; ++j)
            CHECK(constant.coef[map.interior_dof(el, j)] == doctest::Approx(0.0).epsilon(1e-13));
    }
    for (int e = 0; e < map.n_edges; ++e) {
        CHECK(constant.coef[map.edge_dof(e, 0)] == doctest::Approx(4.25).epsilon(1e-13));
        CHECK(constant.coef[map.edge_dof(e, 1)] == doctest::Approx(0.0).epsilon(1e-13));
    }
}

TEST_CASE("project_exact on the disk reproduces the quadratic solution") {
    TestCase tc = case2_exact();
    Mesh mesh = case2_mesh(1);
    WeakFunction proj = project_exact(mesh, 2, tc.u);
    WGDofMap map = build_dof_map(mesh, 2);
    // u is quadratic, so Q_0 u = u on every element, curved ones included
    for (int id : {0, 10, 40, 75}) {
        const Element& el = mesh.elements[id];
        std::vector<double> c(map.dim_interior);
        for (int j = 0; j < map.dim_interior; ++j) c[j] = proj.coef[map.interior_dof(el.id, j)];
        Point2 p = el.x_T + Point2{0.3 * el.h_T, -0.2 * el.h_T};
        CHECK(eval_poly(2, c.data(), p, el.x_T, el.h_T) == doctest::Approx(tc.u(p)).epsilon(1e-11));
    }
    // and the edge blocks agree with projecting u directly
    for (int e : {0, 17, 50}) {
        Eigen::VectorXd qb = project_Qb(mesh.edges[e], 2, tc.u);
        for (int m = 0; m < 2; ++m)
            CHECK(proj.coef[map.edge_dof(e, m)] == doctest::Approx(qb[m]).epsilon(1e-12));
    }
}

TEST_CASE("norms vanish exactly at the projection and scale linearly away from it") {
    install_case_curves();
    Mesh mesh = case1_mesh(4, Variant::curved);
    TestCase tc = case1_exact();
    WeakFunction proj = project_exact(mesh, 2, tc.u);
    ErrorReport zero = error_norms(mesh, 2, proj, proj);
    CHECK(zero.energy == 0.0);
    CHECK(zero.l2_interior == 0.0);
    CHECK(zero.l2_edge == 0.0);
    CHECK(zero.h1_broken == 0.0);

    WGDofMap map = build_dof_map(mesh, 2);
    oracle::Rng rng(314);
    WeakFunction off1 = proj, off2 = proj;
    for (int i = 0; i < map.total; ++i) {
        double d = rng.uniform(-1.0, 1.0);
        off1.coef[i] += d;
        off2.coef[i] += 2.0 * d;
    }
    ErrorReport e1 = error_norms(mesh, 2, off1, proj);
    ErrorReport e2 = error_norms(mesh, 2, off2, proj);
    CHECK(e2.energy == doctest::Approx(2.0 * e1.energy).epsilon(1e-12));
    CHECK(e2.l2_interior == doctest::Approx(2.0 * e1.l2_interior).epsilon(1e-12));
    CHECK(e2.l2_edge == doctest::Approx(2.0 * e1.l2_edge).epsilon(1e-12));
    CHECK(e2.h1_broken == doctest::Approx(2.0 * e1.h1_broken).epsilon(1e-12));
}

TEST_CASE("edge and gradient norms have closed forms for single-slot vectors") {
    Mesh two = fixtures::two_element_square();
    WGDofMap map = build_dof_map(two, 1);
    WeakFunction zero;
    zero.coef.assign(map.total, 0.0);

    // v_b = 1 on the shared edge only: both neighbors weigh it by their h_T
    WeakFunction eb = zero;
    eb.coef[map.edge_dof(6, 0)] = 1.0;
    ErrorReport re = error_norms(two, 1, eb, zero);
    double hT = std::sqrt(1.25); // 0.5 x 1 halves
    CHECK(re.l2_edge == doctest::Approx(std::sqrt(2.0 * hT)).epsilon(1e-12));
    CHECK(re.h1_broken == 0.0);

    // v_0 = xi on the left element only: |grad v_0|^2 integrates to |T| / h_T^2
    WeakFunction ei = zero;
    ei.coef[map.interior_dof(0, 1)] = 1.0;
    ErrorReport ri = error_norms(two, 1, ei, zero);
    CHECK(ri.h1_broken == doctest::Approx(std::sqrt(0.5) / hT).epsilon(1e-12));
}

TEST_CASE("discrete H1 norm stays within a fixed bracket of the energy norm") {
    install_case_curves();
    Mesh mesh = case1_mesh(4, Variant::curved);
    const int k = 1;
    WGDofMap map = build_dof_map(mesh, k);
    WeakFunction zero;
    zero.coef.assign(map.total, 0.0);
    oracle::Rng rng(555);
    for (int trial = 0; trial < 5; ++trial) {
        WeakFunction v;
        v.coef.assign(map.total, 0.0);
        for (int i = 0; i < map.total; ++i) v.coef[i] = rng.uniform(-1.0, 1.0);
        for (const Edge& e : mesh.edges) // keep v in the zero-trace subspace
            if (e.boundary)
                for (int m = 0; m < k; ++m) v.coef[map.edge_dof(e.id, m)] = 0.0;

        ErrorReport err = error_norms(mesh, k, v, zero);
        // |v|_{1,h}^2 = sum_T |grad v0|^2 + h_T^{-1} |v0 - vb|^2_{dT}
        double jump = 0.0;
        for (const Element& el : mesh.elements) {
            std::vector<double> c(map.dim_interior);
            for (int j = 0; j < map.dim_interior; ++j)
                c[j] = v.coef[map.interior_dof(el.id, j)];
            double acc = 0.0;
            for (const SignedEdge& se : el.loop) {
                const Edge& e = mesh.edges[se.edge];
                EdgeQuad q = edge_quad(e, 12);
                for (int i = 0; i < q.n; ++i) {
                    double v0 = eval_poly(k, c.data(), q.p[i], el.x_T, el.h_T);
                    double vb = 0.0, tm = 1.0;
                    for (int m = 0; m < k; ++m, tm *= q.t[i])
                        vb += v.coef[map.edge_dof(e.id, m)] * tm;
                    acc += q.w[i] * norm(q.d[i]) * (v0 - vb) * (v0 - vb);
                }
            }
            jump += acc / el.h_T;
        }
        double h1h = std::sqrt(err.h1_broken * err.h1_broken + jump);
        double ratio = h1h / err.energy;
        CHECK(ratio >= 0.1);
        CHECK(ratio <= 10.0);
    }
}

TEST_CASE("errors of the solved curved benchmark are regression-stable") {
    install_case_curves();
    Mesh mesh = case1_mesh(8, Variant::curved);
    TestCase tc = case1_exact();
    SparseSystem sys = assemble(mesh, 1, tc.f, tc.g);
    WeakFunction u_h = expand_solution(sys, solve_cg(sys.A, sys.b).x);
    ErrorReport err = error_norms(mesh, 1, u_h, project_exact(mesh, 1, tc.u));
    CHECK(err.energy == doctest::Approx(0.0600579).epsilon(1e-3));
    CHECK(err.l2_interior == doctest::Approx(0.00553571).epsilon(1e-3));
}

TEST_CASE("rates: halving h, constant errors, and the 3.04 spot value") {
    std::vector<StudyRow> rows = {row(1, 0.25, 1e-2, 3.43e-4, 1e-2, 1e-2),
                                  row(2, 0.125, 2.5e-3, 4.16e-5, 1e-2, 5e-3)};
    ConvergenceReport rep = rates(rows);
    REQUIRE(rep.rows.size() == 2);
    CHECK(std::isnan(rep.rows[0].rate_energy));
    CHECK(rep.rows[1].rate_energy == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.rows[1].rate_l2 == doctest::Approx(3.04).epsilon(1e-2));
    CHECK(rep.rows[1].rate_eb == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rep.rows[1].rate_h1 == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<StudyRow> bad = {row(1, 0.25, 1, 1, 1, 1), row(2, 0.25, 1, 1, 1, 1)};
    CHECK_THROWS_AS(rates(bad), DomainError);
}

TEST_CASE("csv layout is stable") {
    std::vector<StudyRow> rows = {row(1, 0.25, 1e-2, 2e-3, 3e-3, 4e-2),
                                  row(2, 0.125, 2.5e-3, 2.5e-4, 7.5e-4, 2e-2)};
    std::string csv = to_csv(rates(rows));
    CHECK(csv ==
          "level,h,dofs,energy,energy_rate,l2,l2_rate,eb,eb_rate,h1,h1_rate\n"
          "1,0.25,100,0.01,,0.002,,0.003,,0.04,\n"
          "2,0.125,400,0.0025,2.00,0.00025,3.00,0.00075,2.00,0.02,1.00\n");
}

} // TEST_SUITE
