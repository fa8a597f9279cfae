#pragma once

#include <functional>
#include <string>

#include "wg/geometry.hpp"

namespace wg {

// One manufactured benchmark: exact solution, its gradient, f = -laplace u,
// and boundary data. All three solutions vanish on the true boundary, and g
// stays identically zero in the straightened variants too: imposing the true
// boundary values on the chords is the geometric error that makes the
// straightened runs lose accuracy.
struct TestCase {
    std::string name;
    std::function<double(Point2)> u;
    std::function<Point2(Point2)> grad_u;
    std::function<double(Point2)> f;
    std::function<double(Point2)> g;
};

enum class Variant { curved, straight };

// Registers the named boundary curves case1_g1 (sin(pi x)/20) and case1_g2
// (1 + sin(3 pi x)/20); safe to call repeatedly.
void install_case_curves(CurveRegistry& registry = CurveRegistry::global());

TestCase case1_exact();
TestCase case2_exact();
TestCase case3_exact();

// n x n mapped quadrilaterals on {0 <= x <= 1, g1(x) <= y <= g2(x)}. The
// structured node (x_s, y_s) lands at y_s + g1(x_s)(1 - 2 y_s) below the
// midline and 1 - y_s + g2(x_s)(2 y_s - 1) above it, so n must be even.
// Boundary edges along g1/g2 are graph curves (curved) or chords (straight);
// everything else is straight in both variants.
Mesh case1_mesh(int n, Variant variant);

// Unit circle: 5 * 2^(L-1) equal radial bands with the angular count graded
// by radius (ring q has 8 * 2^floor(log2 q) nodes), so every cell is
// near-square — eight fat wedges at the center, quad bands, and pentagon
// bands where the count doubles. Meshsize near 0.3 / 2^(L-1). All interior
// edges are straight; the outer boundary is arcs (curved) or chords
// (straight).
Mesh case2_mesh(int level, Variant variant = Variant::curved);

// Annulus 0.4 <= r <= 1: quadrilateral bands only, 3 * 2^(L-1) of them,
// 32 * 2^(L-1) sectors.
Mesh case3_mesh(int level, Variant variant = Variant::curved);

// n x n straight mesh of the unit square.
Mesh unit_square_mesh(int n);

} // namespace wg
