#include "sol3/verify.hpp"

#include <cmath>
#include <stdexcept>

namespace sol3 {

GridSpec default_grid(const Immersion& imm) {
    GridSpec grid;
    grid.s = imm.domain().s;
    grid.t = imm.domain().t;
    grid.margin = imm.domain().margin;
    return grid;
}

std::vector<double> grid_nodes(const Interval& range, int count,
                               const std::vector<double>& excluded,
                               const Interval& valid, double margin) {
    if (count < 2) throw std::invalid_argument("grid_nodes: counts must be >= 2");
    if (!(range.lo < range.hi)) throw std::invalid_argument("grid_nodes: empty range");
    std::vector<double> nodes;
    nodes.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double u = range.lo + (range.hi - range.lo) * i / (count - 1);
        if (!valid.contains(u)) continue;
        bool keep = true;
        for (double e : excluded) {
            if (std::abs(u - e) < margin) {
                keep = false;
                break;
            }
        }
        if (keep) nodes.push_back(u);
    }
    if (nodes.empty()) {
        throw std::domain_error("grid_nodes: range empty after exclusions");
    }
    return nodes;
}

VerifyReport verify_surface(const Immersion& imm, const GridSpec& grid, double tol) {
    const ParamDomain& dom = imm.domain();
    const double margin = std::max(grid.margin, dom.margin);
    const auto s_nodes = grid_nodes(grid.s, grid.ns, dom.s_excluded, dom.s_valid, margin);
    const auto t_nodes = grid_nodes(grid.t, grid.nt, dom.t_excluded, dom.t_valid, margin);

    VerifyReport rep;
    rep.tolerance = tol;
    double sum = 0.0;
    for (double s : s_nodes) {
        for (double t : t_nodes) {
            const double h = std::abs(mean_curvature(imm, s, t).H);
            sum += h;
            ++rep.n_evaluated;
            if (h > rep.max_abs_H) {
                rep.max_abs_H = h;
                rep.worst_s = s;
                rep.worst_t = t;
            }
        }
    }
    rep.mean_abs_H = sum / rep.n_evaluated;
    rep.pass = rep.max_abs_H < tol;
    return rep;
}

}  // namespace sol3
