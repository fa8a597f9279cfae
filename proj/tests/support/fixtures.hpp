#pragma once

// Single-element archetype meshes paired with oracle patches covering the
// same region, plus a couple of tiny multi-element meshes.

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wg/geometry.hpp"
#include "wg/testcases.hpp"

namespace fixtures {

struct Archetype {
    const char* name;
    wg::Mesh mesh;
    oracle::Patch patch;
};

inline wg::Mesh one_element(std::vector<wg::Point2> vertices, std::vector<wg::EdgeDef> edges,
                            std::vector<wg::SignedEdge> loop) {
    return wg::build_mesh(std::move(vertices), edges, {std::move(loop)});
}

inline Archetype unit_square() {
    std::vector<wg::Point2> v = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    std::vector<wg::EdgeDef> e = {{0, 1, wg::LineSpec{}},
                                  {1, 2, wg::LineSpec{}},
                                  {2, 3, wg::LineSpec{}},
                                  {3, 0, wg::LineSpec{}}};
    auto mesh = one_element(v, e, {{0, false}, {1, false}, {2, false}, {3, false}});
    return {"unit_square", std::move(mesh),
            oracle::quad_patch({0, 0}, {1, 0}, {1, 1}, {0, 1})};
}

// A convex but visibly skewed straight quad, for tests that should not be
// fooled by axis alignment.
inline Archetype skew_quad() {
    wg::Point2 p0{0.1, -0.05}, p1{1.15, 0.1}, p2{1.3, 0.95}, p3{-0.2, 1.05};
    std::vector<wg::Point2> v = {p0, p1, p2, p3};
    std::vector<wg::EdgeDef> e = {{0, 1, wg::LineSpec{}},
                                  {1, 2, wg::LineSpec{}},
                                  {2, 3, wg::LineSpec{}},
                                  {3, 0, wg::LineSpec{}}};
    auto mesh = one_element(v, e, {{0, false}, {1, false}, {2, false}, {3, false}});
    return {"skew_quad", std::move(mesh), oracle::quad_patch(p0, p1, p2, p3)};
}

// Quarter-disk circular sector: two unit spokes and the arc between them.
inline Archetype sector() {
    const double q = M_PI / 2;
    std::vector<wg::Point2> v = {{0, 0}, {1, 0}, {0, 1}};
    std::vector<wg::EdgeDef> e = {{0, 1, wg::LineSpec{}},
                                  {1, 2, wg::ArcSpec{{0, 0}, 1.0, 0.0, q}},
                                  {2, 0, wg::LineSpec{}}};
    auto mesh = one_element(v, e, {{0, false}, {1, false}, {2, false}});
    return {"sector", std::move(mesh), oracle::polar_patch({0, 0}, 0.0, 1.0, 0.0, q)};
}

// Annular band cell, r in [0.5, 1], theta in [0, pi/3]; the inner arc is
// stored forward and traversed reversed.
inline Archetype annular() {
    const double th = M_PI / 3;
    wg::Point2 outer{std::cos(th), std::sin(th)};
    wg::Point2 inner{0.5 * std::cos(th), 0.5 * std::sin(th)};
    std::vector<wg::Point2> v = {{0.5, 0}, {1, 0}, outer, inner};
    std::vector<wg::EdgeDef> e = {{0, 1, wg::LineSpec{}},
                                  {1, 2, wg::ArcSpec{{0, 0}, 1.0, 0.0, th}},
                                  {2, 3, wg::LineSpec{}},
                                  {0, 3, wg::ArcSpec{{0, 0}, 0.5, 0.0, th}}};
    auto mesh = one_element(v, e, {{0, false}, {1, false}, {2, false}, {3, true}});
    return {"annular", std::move(mesh), oracle::polar_patch({0, 0}, 0.5, 1.0, 0.0, th)};
}

// The bottom-left cell of the n = 8 curved benchmark mesh: graph-curve
// bottom, straight chord top, vertical sides.
inline Archetype graph_cell() {
    wg::install_case_curves();
    auto g1 = [](double x) { return std::sin(M_PI * x) / 20.0; };
    const double x1 = 0.125;
    const double ytl = 0.125;                       // node (0, 1/8) maps to itself
    const double ytr = 0.125 + g1(x1) * 0.75;       // node (1/8, 1/8) after the map
    std::vector<wg::Point2> v = {{0, 0}, {x1, g1(x1)}, {x1, ytr}, {0, ytl}};
    std::vector<wg::EdgeDef> e = {{0, 1, wg::GraphSpec{"case1_g1", 0.0, x1}},
                                  {1, 2, wg::LineSpec{}},
                                  {2, 3, wg::LineSpec{}},
                                  {3, 0, wg::LineSpec{}}};
    auto mesh = one_element(v, e, {{0, false}, {1, false}, {2, false}, {3, false}});
    auto chord = [=](double x) { return ytl + (ytr - ytl) * x / x1; };
    return {"graph_cell", std::move(mesh), oracle::strip_patch(0.0, x1, g1, chord)};
}

// The four curved-capable element types the quadrature contracts are pinned
// on: square, mapped quad (curved bottom), circular sector, annular cell.
inline std::vector<Archetype> moment_archetypes() {
    std::vector<Archetype> out;
    out.push_back(unit_square());
    out.push_back(graph_cell());
    out.push_back(sector());
    out.push_back(annular());
    return out;
}

// Those plus the skewed straight quad, for the weak-gradient suites.
inline std::vector<Archetype> all_archetypes() {
    auto out = moment_archetypes();
    out.push_back(skew_quad());
    return out;
}

// Two unit-square halves sharing one interior edge (used forward by the left
// element, reversed by the right).
inline wg::Mesh two_element_square() {
    std::vector<wg::Point2> v = {{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0.5, 1}, {0, 1}};
    std::vector<wg::EdgeDef> e = {
        {0, 1, wg::LineSpec{}}, {1, 2, wg::LineSpec{}}, {2, 3, wg::LineSpec{}},
        {3, 4, wg::LineSpec{}}, {4, 5, wg::LineSpec{}}, {5, 0, wg::LineSpec{}},
        {1, 4, wg::LineSpec{}}};
    std::vector<std::vector<wg::SignedEdge>> loops = {
        {{0, false}, {6, false}, {4, false}, {5, false}},
        {{1, false}, {2, false}, {3, false}, {6, true}}};
    return wg::build_mesh(std::move(v), e, loops);
}

} // namespace fixtures
