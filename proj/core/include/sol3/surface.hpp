#pragma once

// Surface kernel: fundamental forms, the scaled normal e1 x e2, second-form
// products against the ambient connection, mean curvature, and the
// finite-difference oracle. Works for any immersed parametric surface in
// Sol3, not just translation surfaces.

#include <functional>
#include <utility>
#include <vector>

#include "sol3/geometry.hpp"

namespace sol3 {

struct Interval {
    double lo = -2.0;
    double hi = 2.0;
    bool contains(double u) const { return u >= lo && u <= hi; }
};

// Parameter rectangle with excluded singular lines (s = const or t = const),
// each guarded by an exclusion margin so finite-difference stencils and
// sampling grids keep clear of them. s/t are the default sampling window;
// s_valid/t_valid bound where the evaluators are defined at all.
struct ParamDomain {
    Interval s{};
    Interval t{};
    Interval s_valid{-1e300, 1e300};
    Interval t_valid{-1e300, 1e300};
    std::vector<double> s_excluded{};
    std::vector<double> t_excluded{};
    double margin = 1e-3;

    bool contains(double sv, double tv) const;
};

// Position and first/second parameter derivatives at one (s,t).
struct SurfaceJet {
    Point x{};
    CoordVector xs{}, xt{};
    CoordVector xss{}, xst{}, xtt{};
};

// A parameterized surface. Either carries analytic derivative evaluators or
// synthesizes the whole jet from the position evaluator by central
// differences. Evaluators must be pure (safe for concurrent calls).
class Immersion {
public:
    using PositionFn = std::function<Point(double, double)>;
    using JetFn = std::function<SurfaceJet(double, double)>;

    Immersion() = default;

    static Immersion analytic(PositionFn pos, JetFn jet, ParamDomain dom);
    static Immersion from_position(PositionFn pos, ParamDomain dom);

    Point position(double s, double t) const;
    SurfaceJet jet(double s, double t) const;

    bool analytic_derivatives() const { return static_cast<bool>(jet_); }
    const ParamDomain& domain() const { return domain_; }

    // Same surface with the analytic evaluators dropped (FD-synthesized jet).
    Immersion with_fd_derivatives() const;

    // Same surface with a replacement parameter domain.
    Immersion with_domain(ParamDomain dom) const;

private:
    PositionFn pos_{};
    JetFn jet_{};
    ParamDomain domain_{};
};

struct FirstForm {
    double E = 0.0, F = 0.0, G = 0.0;
    double det() const { return E * G - F * F; }
};

// Products of the unnormalized normal against the tangential covariant
// derivatives: l = <N,D11>, m = <N,D12>, n = <N,D22>.
struct SecondFormScaled {
    double l = 0.0, m = 0.0, n = 0.0;
};

struct CurvatureReport {
    double H = 0.0;         // mean curvature for the unit normal N/|N|
    double residual = 0.0;  // G*l - 2F*m + E*n
    double norm_N = 0.0;    // |e1 x e2|
    double det1 = 0.0;      // EG - F^2
};

struct SingularPoint : std::domain_error {
    using std::domain_error::domain_error;
};

// Frame components of the coordinate velocities x_s, x_t at (s,t).
// Throws SingularPoint when EG - F^2 < 1e-12 * max(E,G)^2.
std::pair<FrameVector, FrameVector> tangent_frame(const Immersion& imm, double s, double t);

FirstForm first_form(const Immersion& imm, double s, double t);

// e1 x e2 in the orthonormal frame; |N|^2 = EG - F^2 and <N,e1> = <N,e2> = 0.
FrameVector normal_scaled(const Immersion& imm, double s, double t);

// nabla_{e_i} e_j for i,j in {1,2}, assembled from the jet through the chain
// rule of coord_to_frame (the z-dependence of the frame included).
FrameVector surface_covariant(const Immersion& imm, double s, double t, int i, int j);

SecondFormScaled second_form_scaled(const Immersion& imm, double s, double t);

// Left-hand side of the minimality equation G*l - 2F*m + E*n with the
// cross-product normal; zero exactly on minimal surfaces.
double minimality_residual(const Immersion& imm, double s, double t);

CurvatureReport mean_curvature(const Immersion& imm, double s, double t);

// Independent oracle: mean curvature from the position evaluator alone,
// all derivatives by central differences. Throws std::domain_error when the
// stencil crosses a domain exclusion.
double fd_mean_curvature(const Immersion& imm, double s, double t);

// Surface composed with an ambient isometry (same parameter domain).
Immersion transformed(const Immersion& imm, const IsometryElement& iso);

// Parameter swap (s,t) -> (t,s); reverses orientation.
Immersion swapped(const Immersion& imm);

}  // namespace sol3
