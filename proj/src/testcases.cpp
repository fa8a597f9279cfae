#include "wg/testcases.hpp"

#include <cmath>

namespace wg {

namespace {

double g1_val(double x) { return std::sin(M_PI * x) / 20.0; }
double g1_d(double x) { return M_PI * std::cos(M_PI * x) / 20.0; }
double g1_dd(double x) { return -M_PI * M_PI * std::sin(M_PI * x) / 20.0; }
double g2_val(double x) { return 1.0 + std::sin(3.0 * M_PI * x) / 20.0; }
double g2_d(double x) { return 3.0 * M_PI * std::cos(3.0 * M_PI * x) / 20.0; }
double g2_dd(double x) { return -9.0 * M_PI * M_PI * std::sin(3.0 * M_PI * x) / 20.0; }

} // namespace

void install_case_curves(CurveRegistry& registry) {
    registry.add("case1_g1", {g1_val, g1_d});
    registry.add("case1_g2", {g2_val, g2_d});
}

TestCase case1_exact() {
    TestCase tc;
    tc.name = "curved_quad";
    tc.u = [](Point2 p) {
        return p.x * (p.x - 1.0) * (p.y - g1_val(p.x)) * (p.y - g2_val(p.x));
    };
    tc.grad_u = [](Point2 p) {
        const double a = p.x * (p.x - 1.0), da = 2.0 * p.x - 1.0;
        const double y1 = p.y - g1_val(p.x), y2 = p.y - g2_val(p.x);
        return Point2{da * y1 * y2 - a * (g1_d(p.x) * y2 + g2_d(p.x) * y1),
                      a * (y1 + y2)};
    };
    // with a = x(x-1) and P = (y - g1)(y - g2) = y^2 - s y + p:
    // -laplace u = -(a'' P + 2 a' P_x + a P_xx + a P_yy)
    tc.f = [](Point2 p) {
        const double x = p.x, y = p.y;
        const double a = x * (x - 1.0), da = 2.0 * x - 1.0;
        const double s = g1_val(x) + g2_val(x), ds = g1_d(x) + g2_d(x),
                     dds = g1_dd(x) + g2_dd(x);
        const double pr = g1_val(x) * g2_val(x);
        const double dpr = g1_d(x) * g2_val(x) + g1_val(x) * g2_d(x);
        const double ddpr = g1_dd(x) * g2_val(x) + 2.0 * g1_d(x) * g2_d(x) +
                            g1_val(x) * g2_dd(x);
        const double P = y * y - s * y + pr;
        const double Px = -ds * y + dpr;
        const double Pxx = -dds * y + ddpr;
        return -(2.0 * P + 2.0 * da * Px + a * Pxx + 2.0 * a);
    };
    // u vanishes on the true boundary; the straight variant deliberately keeps
    // this zero data on the chords (that geometric error is the point of the
    // comparison).
    tc.g = [](Point2) { return 0.0; };
    return tc;
}

TestCase case2_exact() {
    TestCase tc;
    tc.name = "circle";
    tc.u = [](Point2 p) { return 1.0 - p.x * p.x - p.y * p.y; };
    tc.grad_u = [](Point2 p) { return Point2{-2.0 * p.x, -2.0 * p.y}; };
    tc.f = [](Point2) { return 4.0; };
    tc.g = [](Point2) { return 0.0; };
    return tc;
}

TestCase case3_exact() {
    TestCase tc;
    tc.name = "annulus";
    tc.u = [](Point2 p) {
        const double r2 = p.x * p.x + p.y * p.y;
        return -(r2 - 1.0) * (r2 - 0.16);
    };
    tc.grad_u = [](Point2 p) {
        const double r2 = p.x * p.x + p.y * p.y;
        return Point2{(2.32 - 4.0 * r2) * p.x, (2.32 - 4.0 * r2) * p.y};
    };
    tc.f = [](Point2 p) { return 16.0 * (p.x * p.x + p.y * p.y) - 4.64; };
    tc.g = [](Point2) { return 0.0; };
    return tc;
}

namespace {

// Shared n x n structured-quad topology; the mapped benchmark domain and the
// plain unit square differ only in node placement and the two horizontal
// boundary runs.
Mesh structured_quads(int n, const std::function<Point2(double, double)>& node,
                      const std::function<CurveSpec(int, int)>& bottom_top) {
    std::vector<Point2> vertices((n + 1) * (n + 1));
    auto vid = [n](int i, int j) { return j * (n + 1) + i; };
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            vertices[vid(i, j)] = node(double(i) / n, double(j) / n);

    std::vector<EdgeDef> edges;
    edges.reserve(2 * n * (n + 1));
    auto hid = [n](int i, int j) { return j * n + i; };
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i < n; ++i) {
            EdgeDef e;
            e.v0 = vid(i, j);
            e.v1 = vid(i + 1, j);
            if (j == 0 || j == n) e.geometry = bottom_top(i, j);
            edges.push_back(e);
        }
    const int vbase = n * (n + 1);
    auto vidx = [&](int i, int j) { return vbase + j * (n + 1) + i; };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= n; ++i) edges.push_back({vid(i, j), vid(i, j + 1), LineSpec{}});

    std::vector<std::vector<SignedEdge>> loops;
    loops.reserve(n * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            loops.push_back({{hid(i, j), false},
                             {vidx(i + 1, j), false},
                             {hid(i, j + 1), true},
                             {vidx(i, j), true}});
    return build_mesh(std::move(vertices), edges, loops);
}

} // namespace

Mesh case1_mesh(int n, Variant variant) {
    if (n < 2 || n % 2 != 0)
        throw DomainError("case1_mesh: n must be even and >= 2 (the node map splits at the "
                          "midline)");
    install_case_curves();
    auto node = [](double xs, double ys) {
        double y = ys <= 0.5 ? ys + g1_val(xs) * (1.0 - 2.0 * ys)
                             : 1.0 - ys + g2_val(xs) * (2.0 * ys - 1.0);
        return Point2{xs, y};
    };
    auto bottom_top = [&](int i, int j) -> CurveSpec {
        if (variant == Variant::straight) return LineSpec{};
        return GraphSpec{j == 0 ? "case1_g1" : "case1_g2", double(i) / n, double(i + 1) / n};
    };
    return structured_quads(n, node, bottom_top);
}

Mesh unit_square_mesh(int n) {
    if (n < 1) throw DomainError("unit_square_mesh: n must be >= 1");
    return structured_quads(
        n, [](double xs, double ys) { return Point2{xs, ys}; },
        [](int, int) -> CurveSpec { return LineSpec{}; });
}

namespace {

// rings of quad cells between radii radii[q] and radii[q+1], circumferential
// edges as true arcs in the curved variant
Mesh polar_mesh(const std::vector<double>& radii, int n_theta, Variant variant) {
    const int n_ring = static_cast<int>(radii.size());
    const double dth = 2.0 * M_PI / n_theta;
    auto theta = [&](int p) { return p * dth; };

    std::vector<Point2> vertices;
    auto vid = [&](int q, int p) { return q * n_theta + (p % n_theta); };
    for (int q = 0; q < n_ring; ++q)
        for (int p = 0; p < n_theta; ++p)
            vertices.push_back(
                {radii[q] * std::cos(theta(p)), radii[q] * std::sin(theta(p))});

    std::vector<EdgeDef> edges;
    const int radial0 = 0;
    for (int q = 0; q + 1 < n_ring; ++q)
        for (int p = 0; p < n_theta; ++p)
            edges.push_back({vid(q, p), vid(q + 1, p), LineSpec{}});
    const int arc0 = static_cast<int>(edges.size());
    for (int q = 0; q < n_ring; ++q)
        for (int p = 0; p < n_theta; ++p) {
            EdgeDef e;
            e.v0 = vid(q, p);
            e.v1 = vid(q, p + 1);
            if (variant == Variant::curved)
                e.geometry = ArcSpec{{0.0, 0.0}, radii[q], theta(p), theta(p + 1)};
            edges.push_back(e);
        }
    auto radial = [&](int q, int p) { return radial0 + q * n_theta + (p % n_theta); };
    auto arc = [&](int q, int p) { return arc0 + q * n_theta + (p % n_theta); };

    std::vector<std::vector<SignedEdge>> loops;
    for (int q = 0; q + 1 < n_ring; ++q)
        for (int p = 0; p < n_theta; ++p)
            loops.push_back({{radial(q, p), false},
                             {arc(q + 1, p), false},
                             {radial(q, p + 1), true},
                             {arc(q, p), true}});
    return build_mesh(std::move(vertices), edges, loops);
}

int level_scale(int level) {
    if (level < 1 || level > 12) throw DomainError("mesh level must be in 1..12");
    return 1 << (level - 1);
}

// Disk meshed in N equal radial bands with the angular count graded by
// radius: ring q carries m(q) = 8 * 2^floor(log2 q) nodes, so cells stay
// near-square all the way in and the central fan keeps eight fat wedges at
// every level. Bands where the count doubles are pentagons (one inner chord,
// two radial edges, two outer chords). All interior edges are straight; only
// the outer boundary is curved (arcs in the curved variant, chords in the
// straight one).
Mesh disk_mesh(int N, Variant variant) {
    auto m = [](int q) {
        int v = 8;
        while (q > 1) {
            q /= 2;
            v *= 2;
        }
        return v;
    };

    std::vector<Point2> vertices;
    vertices.push_back({0.0, 0.0});
    std::vector<int> ring_start(N + 1, 0);
    for (int q = 1; q <= N; ++q) {
        ring_start[q] = static_cast<int>(vertices.size());
        const double r = double(q) / N;
        for (int p = 0; p < m(q); ++p) {
            double th = 2.0 * M_PI * p / m(q);
            vertices.push_back({r * std::cos(th), r * std::sin(th)});
        }
    }
    auto vid = [&](int q, int p) { return ring_start[q] + p % m(q); };

    std::vector<EdgeDef> edges;
    std::vector<int> spoke(8);
    for (int p = 0; p < 8; ++p) {
        spoke[p] = static_cast<int>(edges.size());
        edges.push_back({0, vid(1, p), LineSpec{}});
    }
    // chord[q][p]: ring-q circumferential edge p -> p+1
    std::vector<std::vector<int>> chord(N + 1);
    for (int q = 1; q <= N; ++q) {
        chord[q].resize(m(q));
        for (int p = 0; p < m(q); ++p) {
            chord[q][p] = static_cast<int>(edges.size());
            EdgeDef e{vid(q, p), vid(q, p + 1), LineSpec{}};
            if (q == N && variant == Variant::curved)
                e.geometry = ArcSpec{{0.0, 0.0}, 1.0, 2.0 * M_PI * p / m(q),
                                     2.0 * M_PI * (p + 1) / m(q)};
            edges.push_back(e);
        }
    }
    // radial[q][p]: band-q edge from ring q-1 node p outward (q >= 2)
    std::vector<std::vector<int>> radial(N + 1);
    for (int q = 2; q <= N; ++q) {
        const int grow = m(q) / m(q - 1);
        radial[q].resize(m(q - 1));
        for (int p = 0; p < m(q - 1); ++p) {
            radial[q][p] = static_cast<int>(edges.size());
            edges.push_back({vid(q - 1, p), vid(q, grow * p), LineSpec{}});
        }
    }

    std::vector<std::vector<SignedEdge>> loops;
    for (int p = 0; p < 8; ++p)
        loops.push_back({{spoke[p], false}, {chord[1][p], false}, {spoke[(p + 1) % 8], true}});
    for (int q = 2; q <= N; ++q) {
        const int grow = m(q) / m(q - 1);
        for (int p = 0; p < m(q - 1); ++p) {
            std::vector<SignedEdge> loop;
            loop.push_back({radial[q][p], false});
            for (int s = 0; s < grow; ++s) loop.push_back({chord[q][grow * p + s], false});
            loop.push_back({radial[q][(p + 1) % m(q - 1)], true});
            loop.push_back({chord[q - 1][p], true});
            loops.push_back(std::move(loop));
        }
    }
    return build_mesh(std::move(vertices), edges, loops);
}

} // namespace

Mesh case2_mesh(int level, Variant variant) {
    return disk_mesh(5 * level_scale(level), variant);
}

Mesh case3_mesh(int level, Variant variant) {
    const int s = level_scale(level);
    const int n_r = 3 * s, n_theta = 32 * s;
    std::vector<double> radii;
    for (int q = 0; q <= n_r; ++q) radii.push_back(0.4 + 0.6 * double(q) / n_r);
    return polar_mesh(radii, n_theta, variant);
}

} // namespace wg
