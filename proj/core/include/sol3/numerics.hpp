#pragma once

// Small numerics toolbox: finite-difference stencils and the two quadrature
// rules used by the Scherk integral (adaptive Simpson as the workhorse,
// fixed 32-point Gauss-Legendre panels as the independent cross-check).

#include <cmath>
#include <functional>
#include <limits>

namespace sol3 {

// Central-difference step for first derivatives, scaled by the coordinate.
inline double fd_step(double x) {
    return 1e-5 * std::max(1.0, std::abs(x));
}

// Step for second-difference stencils. The 1e-5 step used for first
// derivatives amplifies rounding to ~1e-6 when divided by h^2; eps^(1/4)
// balances truncation against round-off for f''.
inline double fd_step2(double x) {
    static const double h0 = std::pow(std::numeric_limits<double>::epsilon(), 0.25);
    return h0 * std::max(1.0, std::abs(x));
}

template <class F>
double central_d1(F&& f, double x) {
    const double h = fd_step(x);
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
double central_d2(F&& f, double x) {
    const double h = fd_step2(x);
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// Integral of f over [a,b] (oriented: a > b gives the negated value) with
// absolute tolerance tol. The subdivision stops early once the requested
// tolerance falls below the round-off floor of the running estimate; a
// recursion deeper than 60 levels without convergence throws
// std::runtime_error instead of returning a degraded value.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

// Composite 32-point Gauss-Legendre over [a,b], one panel per unit length
// (at least one). Independent of adaptive_simpson by construction.
double gauss_legendre(const std::function<double(double)>& f, double a, double b);

}  // namespace sol3
