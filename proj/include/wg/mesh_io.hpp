#pragma once

#include <iosfwd>
#include <string>

#include "wg/geometry.hpp"

namespace wg {

// Line-oriented text meshes ('#' starts a comment):
//
//   wgmesh 1
//   vertices N
//   <id> <x> <y>
//   edges M
//   <id> <v0> <v1> line
//   <id> <v0> <v1> arc <cx> <cy> <r> <theta0> <theta1>
//   <id> <v0> <v1> graph <curve_name> <x0> <x1>
//   elements K
//   <id> <ne> <±edge_id ...>
//
// Ids must equal the record's position. A leading '-' on an element's edge
// reference marks reversed traversal ("-0" is edge 0 reversed). Reals are
// written with 17 significant digits, so a write/read round trip is exact.
// graph curve names resolve against the registry.

Mesh read_mesh(std::istream& in, const CurveRegistry& registry = CurveRegistry::global());
Mesh read_mesh_file(const std::string& path,
                    const CurveRegistry& registry = CurveRegistry::global());

void write_mesh(std::ostream& out, const Mesh& mesh);
void write_mesh_file(const std::string& path, const Mesh& mesh);

} // namespace wg
