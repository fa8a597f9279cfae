#include "wg/assembly.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "wg/parallel.hpp"

namespace wg {

WGDofMap build_dof_map(const Mesh& mesh, int k) {
    if (k < 1) throw DomainError("WG order k must be >= 1");
    WGDofMap map;
    map.k = k;
    map.dim_interior = poly_dim(k);
    map.n_elements = static_cast<int>(mesh.elements.size());
    map.n_edges = static_cast<int>(mesh.edges.size());
    map.total = map.n_elements * map.dim_interior + map.n_edges * k;
    map.dirichlet.assign(map.total, 0);
    for (const Edge& e : mesh.edges)
        if (e.boundary)
            for (int m = 0; m < k; ++m) map.dirichlet[map.edge_dof(e.id, m)] = 1;
    map.free_index.assign(map.total, -1);
    map.n_free = 0;
    for (int i = 0; i < map.total; ++i)
        if (!map.dirichlet[i]) map.free_index[i] = map.n_free++;
    return map;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> local_matrices(const Mesh& mesh,
                                                           const Element& element, int k) {
    ElementOperators ops = build_element_operators(mesh, element, k);
    return {std::move(ops.A), std::move(ops.S)};
}

Eigen::VectorXd local_load(const Mesh& mesh, const Element& element, int k,
                           const std::function<double(Point2)>& f) {
    const int dimk = poly_dim(k);
    const int nloc = dimk + static_cast<int>(element.loop.size()) * k;
    Eigen::VectorXd load = Eigen::VectorXd::Zero(nloc);
    const auto mono = monomials(k);
    for (int i = 0; i < dimk; ++i) {
        const Mono m = mono[i];
        load(i) = fan_quadrature(mesh, element, [&](Point2 p) {
            double xi = (p.x - element.x_T.x) / element.h_T;
            double eta = (p.y - element.x_T.y) / element.h_T;
            double v = f(p);
            for (int q = 0; q < m.a; ++q) v *= xi;
            for (int q = 0; q < m.b; ++q) v *= eta;
            return v;
        });
    }
    return load;
}

namespace {

std::vector<int> local_to_global(const WGDofMap& map, const Element& element) {
    std::vector<int> g;
    g.reserve(map.dim_interior + element.loop.size() * map.k);
    for (int j = 0; j < map.dim_interior; ++j) g.push_back(map.interior_dof(element.id, j));
    for (const SignedEdge& se : element.loop)
        for (int m = 0; m < map.k; ++m) g.push_back(map.edge_dof(se.edge, m));
    return g;
}

} // namespace

SparseSystem assemble(const Mesh& mesh, int k, const std::function<double(Point2)>& f,
                      const std::function<double(Point2)>& g, double rho, bool keep_full) {
    SparseSystem sys;
    sys.map = build_dof_map(mesh, k);
    const WGDofMap& map = sys.map;

    sys.dirichlet_values.assign(map.total, 0.0);
    for (const Edge& e : mesh.edges) {
        if (!e.boundary) continue;
        Eigen::VectorXd c = project_Qb(e, k, g);
        for (int m = 0; m < k; ++m) sys.dirichlet_values[map.edge_dof(e.id, m)] = c(m);
    }

    const int nel = map.n_elements;
    std::vector<Eigen::MatrixXd> blocks(nel);
    std::vector<Eigen::VectorXd> loads(nel);
    parallel_for(nel, [&](int i) {
        const Element& el = mesh.elements[i];
        ElementOperators ops = build_element_operators(mesh, el, k);
        blocks[i] = ops.A + rho * ops.S;
        loads[i] = local_load(mesh, el, k, f);
    });

    std::vector<Triplet> trips, trips_full;
    sys.b.assign(map.n_free, 0.0);
    for (int i = 0; i < nel; ++i) {
        const std::vector<int> gdof = local_to_global(map, mesh.elements[i]);
        const Eigen::MatrixXd& L = blocks[i];
        const int n = static_cast<int>(gdof.size());
        for (int r = 0; r < n; ++r) {
            const int gr = gdof[r];
            const int fr = map.free_index[gr];
            if (fr >= 0) sys.b[fr] += loads[i](r);
            for (int c = 0; c < n; ++c) {
                const int gc = gdof[c];
                if (keep_full) trips_full.push_back({gr, gc, L(r, c)});
                if (fr < 0) continue;
                const int fc = map.free_index[gc];
                if (fc >= 0)
                    trips.push_back({fr, fc, L(r, c)});
                else
                    sys.b[fr] -= L(r, c) * sys.dirichlet_values[gc];
            }
        }
    }
    sys.A = SparseMatrix(map.n_free, map.n_free, std::move(trips));
    if (keep_full) sys.A_full = SparseMatrix(map.total, map.total, std::move(trips_full));
    return sys;
}

double solution_norm_check(const std::vector<double>& x, const SparseSystem& system) {
    std::vector<double> r = system.A.multiply(x);
    double rn = 0.0, bn = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double d = r[i] - system.b[i];
        rn += d * d;
        bn += system.b[i] * system.b[i];
    }
    return bn > 0.0 ? std::sqrt(rn / bn) : std::sqrt(rn);
}

WeakFunction expand_solution(const SparseSystem& system, const std::vector<double>& x_free) {
    if (static_cast<int>(x_free.size()) != system.map.n_free)
        throw DomainError("expand_solution: free vector has wrong length");
    WeakFunction u;
    u.coef = system.dirichlet_values;
    for (int i = 0; i < system.map.total; ++i)
        if (system.map.free_index[i] >= 0) u.coef[i] = x_free[system.map.free_index[i]];
    return u;
}

Eigen::VectorXd local_coefficients(const WGDofMap& map, const Mesh& mesh,
                                   const Element& element, const WeakFunction& v) {
    if (static_cast<int>(v.coef.size()) != map.total)
        throw DomainError("coefficient vector does not match the DOF map");
    const std::vector<int> gdof = local_to_global(map, element);
    Eigen::VectorXd loc(gdof.size());
    for (std::size_t i = 0; i < gdof.size(); ++i) loc(i) = v.coef[gdof[i]];
    return loc;
}

void dump_system(std::ostream& out, const SparseSystem& system) {
    char buf[64];
    out << "matrix " << system.A.rows() << " " << system.A.nonzeros() << "\n";
    system.A.for_each([&](int i, int j, double v) {
        std::snprintf(buf, sizeof buf, "%d %d %.17g\n", i, j, v);
        out << buf;
    });
    out << "rhs " << system.b.size() << "\n";
    for (double v : system.b) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        out << buf;
    }
}

} // namespace wg
