#pragma once

// Grid sampling of |H| over a parameter rectangle, used by the CLI verify
// command, the selfcheck suite, and the catalog minimality tests.

#include <vector>

#include "sol3/surface.hpp"

namespace sol3 {

struct GridSpec {
    Interval s{-2.0, 2.0};
    Interval t{-2.0, 2.0};
    int ns = 50;
    int nt = 50;
    double margin = 1e-3;  // exclusion margin around singular lines
};

// Default grid of an immersion: its domain sampling window at 50x50.
GridSpec default_grid(const Immersion& imm);

struct VerifyReport {
    double max_abs_H = 0.0;
    double mean_abs_H = 0.0;
    double worst_s = 0.0;
    double worst_t = 0.0;
    long n_evaluated = 0;
    double tolerance = 0.0;
    bool pass = false;
};

// Uniform nodes over `range`, dropping nodes within `margin` of an excluded
// value or outside `valid`. Throws std::invalid_argument for count < 2 and
// std::domain_error when no node survives.
std::vector<double> grid_nodes(const Interval& range, int count,
                               const std::vector<double>& excluded,
                               const Interval& valid, double margin);

// Evaluates mean_curvature on every usable grid node; pass iff
// max |H| < tol.
VerifyReport verify_surface(const Immersion& imm, const GridSpec& grid, double tol);

}  // namespace sol3
