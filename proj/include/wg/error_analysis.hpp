#pragma once

#include <string>
#include <vector>

#include "wg/assembly.hpp"

namespace wg {

// The four tabulated norms of e_h = Q_h u - u_h: the energy (triple-bar)
// norm, the interior L² norm of e0, the h_T-weighted edge trace norm of e_b,
// and the broken H¹ seminorm of e0.
struct ErrorReport {
    double energy = 0.0;
    double l2_interior = 0.0;
    double l2_edge = 0.0;
    double h1_broken = 0.0;
};

// Q_h u = {element projections Q_0 u, edge projections Q_b u}.
WeakFunction project_exact(const Mesh& mesh, int k, const std::function<double(Point2)>& u);

// Norms of Q_h u - u_h, accumulated element by element from the local
// operators (weak gradients, edge trace maps, mass matrices).
ErrorReport error_norms(const Mesh& mesh, int k, const WeakFunction& u_h,
                        const WeakFunction& exact_projection);

struct StudyRow {
    int level = 0;
    double h = 0.0;
    int dofs = 0;
    ErrorReport err;
    // consecutive-pair log ratios; NaN on the first row
    double rate_energy = 0.0, rate_l2 = 0.0, rate_eb = 0.0, rate_h1 = 0.0;
};

struct ConvergenceReport {
    std::vector<StudyRow> rows;
};

// Fills the rate columns from consecutive (h, error) pairs; h must decrease
// strictly across levels.
ConvergenceReport rates(const std::vector<StudyRow>& rows);

// level,h,dofs,energy,energy_rate,l2,l2_rate,eb,eb_rate,h1,h1_rate with
// 6-significant-digit errors, 2-decimal rates, blank rates on the first row.
std::string to_csv(const ConvergenceReport& report);

} // namespace wg
