#pragma once

// Classified minimal translation surfaces: the Scherk-type special function
// I(t) = int_0^t sqrt(cosh tau) dtau and its inverse, the zeta-ODE checks,
// and a materializable catalog of every classified surface plus the type-III
// exploration residual.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sol3/families.hpp"
#include "sol3/surface.hpp"

namespace sol3 {

// Quadrature configuration for the Scherk integral. defaults() honors the
// SOL3_QUAD_TOL environment variable when set to a positive number.
struct ScherkIntegral {
    double tol = 1e-12;
    static ScherkIntegral defaults();
};

// I(t) by adaptive Simpson, absolute tolerance cfg.tol (up to the round-off
// floor of the result). Requires |t| <= 300.
double scherk_I(double t, const ScherkIntegral& cfg = ScherkIntegral::defaults());

// Same integral by composite 32-point Gauss-Legendre; the independent rule.
double scherk_I_gauss(double t);

// Unique v with I(v) = u, by bracketing (sqrt(cosh) >= 1 gives |v| <= |u|,
// sqrt(cosh tau) <= e^{|tau|/2} gives the inner bracket) and safeguarded
// Newton with I'(v) = sqrt(cosh v). Throws std::runtime_error if the
// iteration cap is exceeded.
double scherk_I_inv(double u, const ScherkIntegral& cfg = ScherkIntegral::defaults());

// Parameters of a Scherk-type profile g(t) = zeta(t)/2 + m with
// zeta = I^{-1}(c t), first-integral constant c > 0 and e^{4m} = a^2. m is
// always derived from the slope a, never entered independently.
struct ScherkState {
    double c = 1.0;        // first-integral constant, > 0
    double slope = 1.0;    // a, != 0 (only a^2 enters g)
    double shift = 0.0;    // m = log|a| / 2
    int branch = +1;       // sign of zeta'
    double t_offset = 0.0; // optional translation absorbed by the dropped
                           // integration constant

    static ScherkState from_slope(double a, double c, int branch = +1, double t_offset = 0.0);
};

struct ProfileJet {
    double g = 0.0, dg = 0.0, ddg = 0.0;
};

// g, g', g'' of the Scherk profile: zeta = I^{-1}(c t), g = zeta/2 + m,
// g' = c / (2 sqrt(cosh zeta)), g'' = -(c^2/4) sinh(zeta)/cosh^2(zeta).
ProfileJet scherk_g(double t, const ScherkState& st,
                    const ScherkIntegral& cfg = ScherkIntegral::defaults());

// Residuals of the zeta equations: (2 z'' cosh z + z'^2 sinh z,
// z'^2 - c^2 / cosh z).
std::pair<double, double> zeta_ode_residuals(double zeta, double dzeta, double ddzeta,
                                             double c);

// The Scherk profile as a CurveFn for the family builders.
CurveFn scherk_curve(const ScherkState& st,
                     const ScherkIntegral& cfg = ScherkIntegral::defaults());

// ---- catalog ---------------------------------------------------------------

struct PlaneX { double x0 = 0.0; };
struct PlaneY { double y0 = 0.0; };
struct PlaneZ { double z0 = 0.0; };
// ax + by + c = 0 with (a,b) != (0,0); vertical planes, all minimal.
struct GeodesicPlane { double a = 1.0, b = 1.0, c = 0.0; };
// Type I: (s+t, as+b, g(t)) with the Scherk profile g.
struct TypeIScherk { double a = 2.0, b = 0.0, c = 1.0; int branch = +1; double t_offset = 0.0; };
// Type II: (s, t+a, log|t+lambda| + mu).
struct TypeIILogConstF { double a = 1.0, lambda = 0.5, mu = 0.0; };
// Type II: (s, t+as+b, g(t)) with the Scherk profile g.
struct TypeIIScherk { double a = 2.0, b = 0.0, c = 1.0; int branch = +1; double t_offset = 0.0; };
// Type III: (s, t e^a, a + log|t+lambda| + mu).
struct TypeIIIConstFLog { double a = 0.0, lambda = 0.5, mu = 0.0; };
// Type III: (s, t e^{f(s)}, f(s) + a) with f = -log|s+lambda| + mu.
struct TypeIIILogConstG { double lambda = 0.5, mu = 0.0, a = 0.0; };
// Type III: (s, t e^{f(s)}, f(s) + log|t| + mu) for an arbitrary profile f.
struct TypeIIILogTAnyF { double mu = 0.0; CurveFn f = curves::affine(1.0, 0.0); };
// Translation-invariant graph z = log(y + lambda) + mu, y + lambda > 0.
struct InvariantLog { double lambda = 0.0, mu = 0.0; };

using SolutionSpec =
    std::variant<PlaneX, PlaneY, PlaneZ, GeodesicPlane, TypeIScherk, TypeIILogConstF,
                 TypeIIScherk, TypeIIIConstFLog, TypeIIILogConstG, TypeIIILogTAnyF,
                 InvariantLog>;

// Immersion with analytic derivatives and a per-variant default sampling
// window that keeps clear of the singular lines. Throws std::invalid_argument
// on invalid parameters (c <= 0, a = 0 where a slope is required, ...).
Immersion materialize(const SolutionSpec& spec,
                      const ScherkIntegral& cfg = ScherkIntegral::defaults());

// Stable catalog names ("plane-z", "type1-scherk", ...).
std::string solution_name(const SolutionSpec& spec);
std::vector<std::string> solution_catalog();

// Builds a spec from a catalog name and positional numeric parameters
// (missing parameters keep their defaults). "type3-logt" takes mu from the
// parameter list and the arbitrary profile from `f` when provided.
SolutionSpec make_solution(const std::string& name, const std::vector<double>& params = {},
                           const std::optional<CurveFn>& f = std::nullopt);

// ---- type-III exploration --------------------------------------------------

// Constants of the type-III reduction; a must be nonzero.
struct Type3ReductionParams {
    double a = 1.0;
    double b = 0.0;
};

// Literal left-hand side of the reduced type-III equation
//   (b-a) g'^2 e^{6g} + (a+b-2atg'+g'^2) e^{4g} + (1+t^2 g'^2) e^{2g} + t^2,
// whose zeros any further minimal type-III surface would have to satisfy.
double g43_residual(const Type3ReductionParams& params, double g, double dg, double ddg,
                    double t);

}  // namespace sol3
