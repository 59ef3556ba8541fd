#pragma once

// Curve-function algebra and the six translation-surface families
// x(s,t) = alpha(s) * beta(t) (types I-III) or beta(t) * alpha(s)
// (types IV-VI), with the closed-form minimality residuals for types I-III.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sol3/surface.hpp"

namespace sol3 {

// Scalar profile function with analytic first and second derivatives.
// Evaluating exactly at an excluded point throws std::domain_error; the
// excluded list also feeds sampling-grid exclusions.
struct CurveFn {
    std::function<double(double)> value;
    std::function<double(double)> deriv;
    std::function<double(double)> deriv2;
    Interval domain{-1e300, 1e300};
    std::vector<double> excluded{};
};

namespace curves {

CurveFn constant(double v);
CurveFn affine(double a, double b);              // a*u + b
CurveFn poly(std::vector<double> coeffs);        // sum c_k u^k
CurveFn log_abs(double lambda, double mu);       //  log|u + lambda| + mu
CurveFn neg_log_abs(double lambda, double mu);   // -log|u + lambda| + mu

}  // namespace curves

// The six combinations of coordinate planes and product order:
//   I / IV : alpha in {z=0}, beta in {y=0}
//   II / V : alpha in {z=0}, beta in {x=0}
//   III / VI: alpha in {y=0}, beta in {x=0}
// with M(alpha,beta) for I-III and M(beta,alpha) for IV-VI.
enum class TranslationType { I = 1, II, III, IV, V, VI };

TranslationType parse_translation_type(const std::string& text);
std::string to_string(TranslationType type);

struct TranslationSurface {
    TranslationType type;
    CurveFn f;  // profile of alpha
    CurveFn g;  // profile of beta
    Immersion immersion;
};

// Assembles the immersion by differentiating the group product of the two
// embedded curves; analytic through second order. For types I-III the result
// reproduces the explicit coordinate formulas
//   I:  (s+t, f(s), g(t))   II: (s, t+f(s), g(t))   III: (s, t e^{f(s)}, f(s)+g(t)).
TranslationSurface build_surface(TranslationType type, CurveFn f, CurveFn g);

// Literal left-hand sides of the type I-III minimality equations.
double residual_type1(const CurveFn& f, const CurveFn& g, double s, double t);
double residual_type2(const CurveFn& f, const CurveFn& g, double s, double t);
double residual_type3(const CurveFn& f, const CurveFn& g, double s, double t);

double residual_for_type(TranslationType type, const CurveFn& f, const CurveFn& g,
                         double s, double t);

// Ratio minimality_residual / residual_typeK. Identically 1 for types I and
// II and -e^{f(s)} for type III (the kernel normal e1 x e2 rescales the
// published one). Empty when |residual_typeK| <= 1e-12 (guarded division).
std::optional<double> kernel_agreement_factor(TranslationType type, const CurveFn& f,
                                              const CurveFn& g, double s, double t);

}  // namespace sol3
