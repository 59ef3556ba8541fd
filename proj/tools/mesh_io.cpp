#include "mesh_io.hpp"

#include <stdexcept>

#include "format.hpp"

namespace sol3cli {

namespace {

std::vector<double> full_nodes(const sol3::Interval& range, int count) {
    if (count < 2) throw std::invalid_argument("mesh_grid: counts must be >= 2");
    if (!(range.lo < range.hi)) throw std::invalid_argument("mesh_grid: empty range");
    std::vector<double> nodes(count);
    for (int i = 0; i < count; ++i) {
        nodes[i] = range.lo + (range.hi - range.lo) * i / (count - 1);
    }
    return nodes;
}

}  // namespace

MeshGrid mesh_grid(const sol3::Immersion& imm, const sol3::GridSpec& grid) {
    MeshGrid mg{full_nodes(grid.s, grid.ns), full_nodes(grid.t, grid.nt)};
    for (double s : mg.s_nodes) {
        for (double t : mg.t_nodes) {
            if (!imm.domain().contains(s, t)) {
                throw std::domain_error(
                    "mesh_grid: node (" + fmt(s) + ", " + fmt(t) +
                    ") hits an excluded line or leaves the domain; adjust the ranges");
            }
        }
    }
    return mg;
}

void write_obj(std::ostream& out, const sol3::Immersion& imm, const MeshGrid& grid) {
    out << "# sol3 surface mesh\n";
    for (double s : grid.s_nodes) {
        for (double t : grid.t_nodes) {
            const sol3::Point p = imm.position(s, t);
            out << "v " << fmt(p.x) << " " << fmt(p.y) << " " << fmt(p.z) << "\n";
        }
    }
    const int nt = static_cast<int>(grid.t_nodes.size());
    const int ns = static_cast<int>(grid.s_nodes.size());
    for (int i = 0; i + 1 < ns; ++i) {
        for (int j = 0; j + 1 < nt; ++j) {
            const int v00 = i * nt + j + 1;  // OBJ indices are 1-based
            const int v10 = (i + 1) * nt + j + 1;
            const int v11 = (i + 1) * nt + j + 2;
            const int v01 = i * nt + j + 2;
            out << "f " << v00 << " " << v10 << " " << v11 << "\n";
            out << "f " << v00 << " " << v11 << " " << v01 << "\n";
        }
    }
}

void write_csv(std::ostream& out, const sol3::Immersion& imm, const MeshGrid& grid) {
    out << "s,t,x,y,z,H\n";
    for (double s : grid.s_nodes) {
        for (double t : grid.t_nodes) {
            const sol3::Point p = imm.position(s, t);
            const double h = sol3::mean_curvature(imm, s, t).H;
            out << fmt17(s) << "," << fmt17(t) << "," << fmt17(p.x) << "," << fmt17(p.y)
                << "," << fmt17(p.z) << "," << fmt17(h) << "\n";
        }
    }
}

}  // namespace sol3cli
