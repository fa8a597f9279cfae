#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wg/assembly.hpp"
#include "wg/config.hpp"
#include "wg/error_analysis.hpp"
#include "wg/errors.hpp"
#include "wg/linear_solver.hpp"
#include "wg/mesh_io.hpp"
#include "wg/testcases.hpp"

namespace {

using namespace wg;

int usage() {
    std::cerr <<
        "usage:\n"
        "  wg mesh <config>                         write one mesh file per level\n"
        "  wg solve <config> [--dump-system <path>] solve the first level, print norms\n"
        "  wg study <config>                        convergence table over all levels\n"
        "  wg moments --mesh <file> --degree <d> [--out <path>]\n";
    return 1;
}

Variant variant_of(const RunConfig& cfg) {
    return cfg.variant == "straight" ? Variant::straight : Variant::curved;
}

Mesh make_mesh(const RunConfig& cfg, int level) {
    if (cfg.case_name == "circle") return case2_mesh(level, variant_of(cfg));
    if (cfg.case_name == "annulus") return case3_mesh(level, variant_of(cfg));
    return case1_mesh(level, variant_of(cfg));
}

TestCase make_case(const RunConfig& cfg) {
    if (cfg.case_name == "circle") return case2_exact();
    if (cfg.case_name == "annulus") return case3_exact();
    return case1_exact();
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    if (!out.flush()) throw Error("write to '" + path + "' failed");
}

struct LevelRun {
    Mesh mesh;
    SparseSystem system;
    WeakFunction u_h;
    SolveReport report;
    ErrorReport err;
};

LevelRun run_level(const RunConfig& cfg, const TestCase& tc, int level) {
    LevelRun run;
    run.mesh = make_mesh(cfg, level);
    run.system = assemble(run.mesh, cfg.k, tc.f, tc.g, cfg.rho);
    CgResult cg = solve_cg(run.system.A, run.system.b, cfg.solver_tol, cfg.solver_maxiter);
    run.report = cg.report;
    run.u_h = expand_solution(run.system, cg.x);
    WeakFunction qu = project_exact(run.mesh, cfg.k, tc.u);
    run.err = error_norms(run.mesh, cfg.k, run.u_h, qu);
    return run;
}

// 25 interior points per element: 5 fan depths x 5 stations around the loop
std::string sample_solution(const Mesh& mesh, int k, const WeakFunction& u) {
    WGDofMap map = build_dof_map(mesh, k);
    std::string out = "x,y,u0\n";
    char buf[96];
    for (const Element& el : mesh.elements) {
        std::vector<double> coef(map.dim_interior);
        for (int j = 0; j < map.dim_interior; ++j)
            coef[j] = u.coef[map.interior_dof(el.id, j)];
        const int ne = static_cast<int>(el.loop.size());
        for (int s = 0; s < 5; ++s) {
            const double pos = (0.1 + 0.2 * s) * ne;
            int le = static_cast<int>(pos);
            if (le >= ne) le = ne - 1;
            double t = pos - le;
            if (el.loop[le].reversed) t = 1.0 - t;
            const Point2 bp = point_at(mesh.edges[el.loop[le].edge], t);
            for (int d = 1; d <= 5; ++d) {
                const double lam = 0.2 * d;
                const Point2 p = el.x_T + lam * (bp - el.x_T);
                const double v = eval_poly(k, coef.data(), p, el.x_T, el.h_T);
                std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g\n", p.x, p.y, v);
                out += buf;
            }
        }
    }
    return out;
}

int cmd_mesh(const RunConfig& cfg) {
    const std::string prefix = cfg.output_mesh.empty() ? "mesh" : cfg.output_mesh;
    for (int level : cfg.levels) {
        Mesh mesh = make_mesh(cfg, level);
        const std::string path = prefix + "_L" + std::to_string(level) + ".wgmesh";
        write_mesh_file(path, mesh);
        std::cout << path << ": " << mesh.elements.size() << " elements, h = " << mesh.h
                  << "\n";
    }
    return 0;
}

int cmd_solve(const RunConfig& cfg, const std::string& dump_path) {
    TestCase tc = make_case(cfg);
    const int level = cfg.levels.front();
    LevelRun run = run_level(cfg, tc, level);
    if (!dump_path.empty()) {
        std::ofstream out(dump_path);
        if (!out) throw Error("cannot open '" + dump_path + "' for writing");
        dump_system(out, run.system);
    }
    if (!cfg.output_samples.empty())
        write_text(cfg.output_samples, sample_solution(run.mesh, cfg.k, run.u_h));
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%s %s k=%d level=%d h=%.6g dofs=%d cg_iters=%d residual=%.3e\n"
                  "energy=%.6g l2=%.6g eb=%.6g h1=%.6g\n",
                  cfg.case_name.c_str(), cfg.variant.c_str(), cfg.k, level, run.mesh.h,
                  run.system.map.total, run.report.iterations, run.report.residual,
                  run.err.energy, run.err.l2_interior, run.err.l2_edge, run.err.h1_broken);
    std::cout << buf;
    return 0;
}

int cmd_study(const RunConfig& cfg) {
    TestCase tc = make_case(cfg);
    std::vector<StudyRow> rows;
    for (int level : cfg.levels) {
        LevelRun run = run_level(cfg, tc, level);
        StudyRow row;
        row.level = level;
        row.h = run.mesh.h;
        row.dofs = run.system.map.total;
        row.err = run.err;
        rows.push_back(row);
    }
    const std::string csv = to_csv(rates(rows));
    if (cfg.output_csv.empty())
        std::cout << csv;
    else
        write_text(cfg.output_csv, csv);
    return 0;
}

int cmd_moments(const std::string& mesh_path, int degree, const std::string& out_path) {
    Mesh mesh = read_mesh_file(mesh_path);
    std::string out = "element,a,b,value\n";
    char buf[96];
    for (const Element& el : mesh.elements) {
        MomentTable tab = element_moments(mesh, el, degree);
        for (int d = 0; d <= degree; ++d)
            for (int a = d; a >= 0; --a) {
                std::snprintf(buf, sizeof buf, "%d,%d,%d,%.17g\n", el.id, a, d - a,
                              tab.at(a, d - a));
                out += buf;
            }
    }
    if (out_path.empty())
        std::cout << out;
    else
        write_text(out_path, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) return usage();
    const std::string cmd = args[0];
    try {
        install_case_curves();
        if (cmd == "mesh" || cmd == "solve" || cmd == "study") {
            if (args.size() < 2) return usage();
            std::string dump_path;
            for (std::size_t i = 2; i < args.size(); ++i) {
                if (args[i] == "--dump-system" && cmd == "solve" && i + 1 < args.size())
                    dump_path = args[++i];
                else
                    return usage();
            }
            RunConfig cfg = parse_config_file(args[1]);
            if (cmd == "mesh") return cmd_mesh(cfg);
            if (cmd == "solve") return cmd_solve(cfg, dump_path);
            return cmd_study(cfg);
        }
        if (cmd == "moments") {
            std::string mesh_path, out_path;
            int degree = -1;
            for (std::size_t i = 1; i < args.size(); ++i) {
                if (args[i] == "--mesh" && i + 1 < args.size())
                    mesh_path = args[++i];
                else if (args[i] == "--degree" && i + 1 < args.size())
                    degree = std::stoi(args[++i]);
                else if (args[i] == "--out" && i + 1 < args.size())
                    out_path = args[++i];
                else
                    return usage();
            }
            if (mesh_path.empty() || degree < 0) return usage();
            return cmd_moments(mesh_path, degree, out_path);
        }
        return usage();
    } catch (const wg::SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
