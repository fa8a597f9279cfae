#include "wg/error_analysis.hpp"

#include <cmath>
#include <cstdio>

#include "wg/parallel.hpp"

namespace wg {

WeakFunction project_exact(const Mesh& mesh, int k, const std::function<double(Point2)>& u) {
    WGDofMap map = build_dof_map(mesh, k);
    WeakFunction out;
    out.coef.assign(map.total, 0.0);
    parallel_for(map.n_elements, [&](int i) {
        Eigen::VectorXd c = project_Q0(mesh, mesh.elements[i], k, u);
        for (int j = 0; j < map.dim_interior; ++j) out.coef[map.interior_dof(i, j)] = c(j);
    });
    parallel_for(map.n_edges, [&](int e) {
        Eigen::VectorXd c = project_Qb(mesh.edges[e], k, u);
        for (int m = 0; m < k; ++m) out.coef[map.edge_dof(e, m)] = c(m);
    });
    return out;
}

ErrorReport error_norms(const Mesh& mesh, int k, const WeakFunction& u_h,
                        const WeakFunction& exact_projection) {
    WGDofMap map = build_dof_map(mesh, k);
    if (u_h.coef.size() != exact_projection.coef.size() ||
        static_cast<int>(u_h.coef.size()) != map.total)
        throw DomainError("error_norms: coefficient layouts disagree");
    WeakFunction e;
    e.coef.resize(map.total);
    for (int i = 0; i < map.total; ++i) e.coef[i] = exact_projection.coef[i] - u_h.coef[i];

    const int dimk = poly_dim(k);
    const int dimk1 = poly_dim(k - 1);
    const int nel = map.n_elements;
    std::vector<double> energy2(nel), l20(nel), l2b(nel), h1(nel);
    parallel_for(nel, [&](int i) {
        const Element& el = mesh.elements[i];
        ElementOperators ops = build_element_operators(mesh, el, k);
        Eigen::VectorXd loc = local_coefficients(map, mesh, el, e);
        Eigen::VectorXd e0 = loc.head(dimk);

        Eigen::VectorXd grad = ops.G * loc;
        Eigen::VectorXd gx = grad.head(dimk1), gy = grad.tail(dimk1);
        double en = gx.dot(ops.Mk1 * gx) + gy.dot(ops.Mk1 * gy);
        double eb = 0.0;
        for (std::size_t le = 0; le < el.loop.size(); ++le) {
            Eigen::VectorXd tr = loc.segment(ops.edge_offset(static_cast<int>(le)), k);
            Eigen::VectorXd jump = ops.R[le] * e0 - tr;
            en += (1.0 / el.h_T) * jump.dot(ops.W[le] * jump);
            eb += el.h_T * tr.dot(ops.W[le] * tr);
        }
        energy2[i] = en;
        l2b[i] = eb;
        l20[i] = e0.dot(ops.Mk * e0);
        Eigen::VectorXd dx = ops.Dx * e0, dy = ops.Dy * e0;
        h1[i] = dx.dot(ops.Mk1 * dx) + dy.dot(ops.Mk1 * dy);
    });

    ErrorReport rep;
    double en = 0, l0 = 0, lb = 0, h1b = 0;
    for (int i = 0; i < nel; ++i) {
        en += energy2[i];
        l0 += l20[i];
        lb += l2b[i];
        h1b += h1[i];
    }
    rep.energy = std::sqrt(en);
    rep.l2_interior = std::sqrt(l0);
    rep.l2_edge = std::sqrt(lb);
    rep.h1_broken = std::sqrt(h1b);
    return rep;
}

ConvergenceReport rates(const std::vector<StudyRow>& rows) {
    ConvergenceReport rep;
    rep.rows = rows;
    const double nan = std::nan("");
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        StudyRow& row = rep.rows[i];
        if (i == 0) {
            row.rate_energy = row.rate_l2 = row.rate_eb = row.rate_h1 = nan;
            continue;
        }
        const StudyRow& prev = rep.rows[i - 1];
        if (!(row.h < prev.h))
            throw DomainError("rates: level meshsizes must decrease strictly");
        const double denom = std::log(prev.h / row.h);
        auto rate = [&](double a, double b) {
            return (a > 0.0 && b > 0.0) ? std::log(a / b) / denom : nan;
        };
        row.rate_energy = rate(prev.err.energy, row.err.energy);
        row.rate_l2 = rate(prev.err.l2_interior, row.err.l2_interior);
        row.rate_eb = rate(prev.err.l2_edge, row.err.l2_edge);
        row.rate_h1 = rate(prev.err.h1_broken, row.err.h1_broken);
    }
    return rep;
}

std::string to_csv(const ConvergenceReport& report) {
    std::string out = "level,h,dofs,energy,energy_rate,l2,l2_rate,eb,eb_rate,h1,h1_rate\n";
    char buf[64];
    auto err = [&](double v) {
        std::snprintf(buf, sizeof buf, ",%.6g", v);
        out += buf;
    };
    auto rate = [&](double v) {
        if (std::isnan(v)) {
            out += ",";
        } else {
            std::snprintf(buf, sizeof buf, ",%.2f", v);
            out += buf;
        }
    };
    for (const StudyRow& row : report.rows) {
        std::snprintf(buf, sizeof buf, "%d,%.6g,%d", row.level, row.h, row.dofs);
        out += buf;
        err(row.err.energy);
        rate(row.rate_energy);
        err(row.err.l2_interior);
        rate(row.rate_l2);
        err(row.err.l2_edge);
        rate(row.rate_eb);
        err(row.err.h1_broken);
        rate(row.rate_h1);
        out += "\n";
    }
    return out;
}

} // namespace wg
