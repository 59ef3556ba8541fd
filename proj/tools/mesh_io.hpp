#pragma once

// Deterministic mesh and table export for sampled surfaces.
//
// OBJ: vertices "v x y z" in model coordinates, row-major over the grid
// (s outer, t inner), quads split into two triangles wound counter-clockwise
// with respect to the e1 x e2 normal. Shortest round-trip numbers.
//
// CSV: header "s,t,x,y,z,H", one row per node, 17 significant digits.

#include <ostream>
#include <vector>

#include "sol3/surface.hpp"
#include "sol3/verify.hpp"

namespace sol3cli {

// Full rectangular node set for meshing; a node on an excluded line or
// outside the valid ranges throws std::domain_error (shrink the ranges).
struct MeshGrid {
    std::vector<double> s_nodes;
    std::vector<double> t_nodes;
};

MeshGrid mesh_grid(const sol3::Immersion& imm, const sol3::GridSpec& grid);

void write_obj(std::ostream& out, const sol3::Immersion& imm, const MeshGrid& grid);
void write_csv(std::ostream& out, const sol3::Immersion& imm, const MeshGrid& grid);

}  // namespace sol3cli
