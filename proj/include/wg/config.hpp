#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wg {

// Line-oriented `key = value` run description ('#' comments). Keys:
//   case           curved_quad | circle | annulus
//   variant        curved | straight
//   k              1 | 2 | 3
//   levels         list of integers, ascending (divisions n for curved_quad,
//                  refinement level for circle/annulus)
//   solver.tol     CG relative residual target (default 1e-12)
//   solver.maxiter iteration cap (default 20 sqrt(n) + 200)
//   rho            stabilizer weight (default 1)
//   output.csv     study table destination ("" = stdout)
//   output.mesh    mesh file prefix for the mesh command
//   output.samples solution sample CSV for the solve command
struct RunConfig {
    std::string case_name = "curved_quad";
    std::string variant = "curved";
    int k = 1;
    std::vector<int> levels;
    double solver_tol = 1e-12;
    int solver_maxiter = -1;
    double rho = 1.0;
    std::string output_csv;
    std::string output_mesh;
    std::string output_samples;
};

RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

} // namespace wg
