#include "sol3/families.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sol3 {

namespace {

void check_in_domain(const CurveFn& c, double u, const char* what) {
    if (!c.domain.contains(u)) {
        throw std::domain_error(std::string(what) + ": parameter outside curve domain");
    }
    for (double e : c.excluded) {
        if (u == e) {
            throw std::domain_error(std::string(what) + ": parameter at a singular point");
        }
    }
}

struct CurveJet {
    double v, d1, d2;
};

CurveJet eval_jet(const CurveFn& c, double u) {
    check_in_domain(c, u, "CurveFn");
    return {c.value(u), c.deriv(u), c.deriv2(u)};
}

// A curve embedded in a coordinate plane, as a point-valued map with
// derivatives.
enum class PlaneOfCurve { z0_graph, y0_graph, x0_graph };
// z0_graph: u -> (u, v(u), 0)     (curves in {z=0})
// y0_graph: u -> (u, 0, v(u))     (curves in {y=0})
// x0_graph: u -> (0, u, v(u))     (curves in {x=0})

struct EmbeddedJet {
    Point p;
    CoordVector d1, d2;
};

EmbeddedJet embed(PlaneOfCurve plane, const CurveFn& c, double u) {
    const CurveJet j = eval_jet(c, u);
    switch (plane) {
        case PlaneOfCurve::z0_graph:
            return {{u, j.v, 0.0}, {1.0, j.d1, 0.0}, {0.0, j.d2, 0.0}};
        case PlaneOfCurve::y0_graph:
            return {{u, 0.0, j.v}, {1.0, 0.0, j.d1}, {0.0, 0.0, j.d2}};
        case PlaneOfCurve::x0_graph:
            return {{0.0, u, j.v}, {0.0, 1.0, j.d1}, {0.0, 0.0, j.d2}};
    }
    throw std::logic_error("embed: unreachable");
}

struct TypeLayout {
    PlaneOfCurve alpha_plane;
    PlaneOfCurve beta_plane;
    bool beta_first;  // true for IV-VI: x(s,t) = beta(t) * alpha(s)
};

TypeLayout layout_of(TranslationType type) {
    switch (type) {
        case TranslationType::I:   return {PlaneOfCurve::z0_graph, PlaneOfCurve::y0_graph, false};
        case TranslationType::II:  return {PlaneOfCurve::z0_graph, PlaneOfCurve::x0_graph, false};
        case TranslationType::III: return {PlaneOfCurve::y0_graph, PlaneOfCurve::x0_graph, false};
        case TranslationType::IV:  return {PlaneOfCurve::z0_graph, PlaneOfCurve::y0_graph, true};
        case TranslationType::V:   return {PlaneOfCurve::z0_graph, PlaneOfCurve::x0_graph, true};
        case TranslationType::VI:  return {PlaneOfCurve::y0_graph, PlaneOfCurve::x0_graph, true};
    }
    throw std::invalid_argument("build_surface: invalid translation type");
}

// Jet of the group product L(sigma) * R(tau) through the group law. sigma
// and tau are the parameters of the left and right factor respectively.
struct ProductJet {
    Point x;
    CoordVector d_sigma, d_tau, d_sigma2, d_sigma_tau, d_tau2;
};

ProductJet product_jet(const EmbeddedJet& L, const EmbeddedJet& R) {
    if (std::abs(L.p.z) > kMaxAbsZ || std::abs(L.p.z + R.p.z) > kMaxAbsZ) {
        throw std::domain_error("build_surface: |z| > 300 exceeds the exponent guard");
    }
    const double em = std::exp(-L.p.z);  // e^{-L.z}
    const double ep = std::exp(L.p.z);   // e^{+L.z}
    const double lz1 = L.d1.dz, lz2 = L.d2.dz;
    ProductJet P;
    P.x = {L.p.x + em * R.p.x, L.p.y + ep * R.p.y, L.p.z + R.p.z};
    P.d_sigma = {L.d1.dx - lz1 * em * R.p.x, L.d1.dy + lz1 * ep * R.p.y, lz1};
    P.d_tau = {em * R.d1.dx, ep * R.d1.dy, R.d1.dz};
    P.d_sigma2 = {L.d2.dx + (lz1 * lz1 - lz2) * em * R.p.x,
                  L.d2.dy + (lz2 + lz1 * lz1) * ep * R.p.y,
                  lz2};
    P.d_sigma_tau = {-lz1 * em * R.d1.dx, lz1 * ep * R.d1.dy, 0.0};
    P.d_tau2 = {em * R.d2.dx, ep * R.d2.dy, R.d2.dz};
    return P;
}

Interval clip_window(Interval window, const Interval& valid) {
    window.lo = std::max(window.lo, valid.lo);
    window.hi = std::min(window.hi, valid.hi);
    return window;
}

double horner(const std::vector<double>& c, double u) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
    return acc;
}

}  // namespace

namespace curves {

CurveFn constant(double v) {
    CurveFn c;
    c.value = [v](double) { return v; };
    c.deriv = [](double) { return 0.0; };
    c.deriv2 = [](double) { return 0.0; };
    return c;
}

CurveFn affine(double a, double b) {
    CurveFn c;
    c.value = [a, b](double u) { return a * u + b; };
    c.deriv = [a](double) { return a; };
    c.deriv2 = [](double) { return 0.0; };
    return c;
}

CurveFn poly(std::vector<double> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    std::vector<double> d1(coeffs.size() > 1 ? coeffs.size() - 1 : 1, 0.0);
    for (size_t k = 1; k < coeffs.size(); ++k) d1[k - 1] = k * coeffs[k];
    std::vector<double> d2(d1.size() > 1 ? d1.size() - 1 : 1, 0.0);
    for (size_t k = 1; k < d1.size(); ++k) d2[k - 1] = k * d1[k];
    CurveFn c;
    c.value = [coeffs](double u) { return horner(coeffs, u); };
    c.deriv = [d1](double u) { return horner(d1, u); };
    c.deriv2 = [d2](double u) { return horner(d2, u); };
    return c;
}

CurveFn log_abs(double lambda, double mu) {
    CurveFn c;
    c.value = [lambda, mu](double u) {
        const double a = u + lambda;
        if (a == 0.0) throw std::domain_error("log_abs: singular at u = -lambda");
        return std::log(std::abs(a)) + mu;
    };
    c.deriv = [lambda](double u) { return 1.0 / (u + lambda); };
    c.deriv2 = [lambda](double u) { return -1.0 / ((u + lambda) * (u + lambda)); };
    c.excluded = {-lambda};
    return c;
}

CurveFn neg_log_abs(double lambda, double mu) {
    CurveFn c;
    c.value = [lambda, mu](double u) {
        const double a = u + lambda;
        if (a == 0.0) throw std::domain_error("neg_log_abs: singular at u = -lambda");
        return mu - std::log(std::abs(a));
    };
    c.deriv = [lambda](double u) { return -1.0 / (u + lambda); };
    c.deriv2 = [lambda](double u) { return 1.0 / ((u + lambda) * (u + lambda)); };
    c.excluded = {-lambda};
    return c;
}

}  // namespace curves

TranslationType parse_translation_type(const std::string& text) {
    if (text == "I" || text == "1") return TranslationType::I;
    if (text == "II" || text == "2") return TranslationType::II;
    if (text == "III" || text == "3") return TranslationType::III;
    if (text == "IV" || text == "4") return TranslationType::IV;
    if (text == "V" || text == "5") return TranslationType::V;
    if (text == "VI" || text == "6") return TranslationType::VI;
    throw std::invalid_argument("unknown translation type '" + text + "' (expected I..VI)");
}

std::string to_string(TranslationType type) {
    switch (type) {
        case TranslationType::I: return "I";
        case TranslationType::II: return "II";
        case TranslationType::III: return "III";
        case TranslationType::IV: return "IV";
        case TranslationType::V: return "V";
        case TranslationType::VI: return "VI";
    }
    return "?";
}

TranslationSurface build_surface(TranslationType type, CurveFn f, CurveFn g) {
    const TypeLayout lay = layout_of(type);

    ParamDomain dom;
    dom.s = clip_window(Interval{-2.0, 2.0}, f.domain);
    dom.t = clip_window(Interval{-2.0, 2.0}, g.domain);
    dom.s_valid = f.domain;
    dom.t_valid = g.domain;
    dom.s_excluded = f.excluded;
    dom.t_excluded = g.excluded;

    const auto jet_fn = [lay, f, g](double s, double t) {
        const EmbeddedJet alpha = embed(lay.alpha_plane, f, s);
        const EmbeddedJet beta = embed(lay.beta_plane, g, t);
        SurfaceJet out;
        if (!lay.beta_first) {
            const ProductJet P = product_jet(alpha, beta);  // sigma = s, tau = t
            out = {P.x, P.d_sigma, P.d_tau, P.d_sigma2, P.d_sigma_tau, P.d_tau2};
        } else {
            const ProductJet P = product_jet(beta, alpha);  // sigma = t, tau = s
            out = {P.x, P.d_tau, P.d_sigma, P.d_tau2, P.d_sigma_tau, P.d_sigma2};
        }
        return out;
    };
    const auto pos_fn = [jet_fn](double s, double t) { return jet_fn(s, t).x; };

    TranslationSurface surf{type, f, g, Immersion::analytic(pos_fn, jet_fn, dom)};
    return surf;
}

double residual_type1(const CurveFn& f, const CurveFn& g, double s, double t) {
    check_in_domain(f, s, "residual_type1");
    check_in_domain(g, t, "residual_type1");
    const double f1 = f.deriv(s), f2 = f.deriv2(s);
    const double gv = g.value(t), g1 = g.deriv(t), g2 = g.deriv2(t);
    const double e2g = std::exp(2.0 * gv);
    return -f2 * g1 * g1 * g1
           - e2g * (f2 * g1 + f1 * g1 * g1 + f1 * g2)
           + (f1 * f1 * f1) * (g1 * g1 - g2) / e2g;
}

double residual_type2(const CurveFn& f, const CurveFn& g, double s, double t) {
    check_in_domain(f, s, "residual_type2");
    check_in_domain(g, t, "residual_type2");
    const double f1 = f.deriv(s), f2 = f.deriv2(s);
    const double gv = g.value(t), g1 = g.deriv(t), g2 = g.deriv2(t);
    const double e2g = std::exp(2.0 * gv);
    return -f2 * g1 * g1 * g1
           + (f1 * f1 * (g2 - g1 * g1) - f2 * g1) / e2g
           + e2g * (g2 + g1 * g1);
}

double residual_type3(const CurveFn& f, const CurveFn& g, double s, double t) {
    check_in_domain(f, s, "residual_type3");
    check_in_domain(g, t, "residual_type3");
    const double fv = f.value(s), f1 = f.deriv(s), f2 = f.deriv2(s);
    const double gv = g.value(t), g1 = g.deriv(t), g2 = g.deriv2(t);
    const double e2g = std::exp(2.0 * gv);
    const double f1sq = f1 * f1;
    return -std::exp(2.0 * (fv + gv)) * (g2 + g1 * g1)
           + (t * t * f1sq * g1 * g1 + f1sq - t * t * f1sq * g2 - 3.0 * t * f1sq * g1 +
              t * f2 * g1 - f2) / e2g
           - 2.0 * f1sq * g1 * g1 + t * f1sq * g1 * g1 * g1 + t * f2 * g1 * g1 * g1
           - f2 * g1 * g1 - f1sq * g2;
}

double residual_for_type(TranslationType type, const CurveFn& f, const CurveFn& g,
                         double s, double t) {
    switch (type) {
        case TranslationType::I: return residual_type1(f, g, s, t);
        case TranslationType::II: return residual_type2(f, g, s, t);
        case TranslationType::III: return residual_type3(f, g, s, t);
        default:
            throw std::invalid_argument(
                "residual_for_type: closed-form residuals exist for types I-III only");
    }
}

std::optional<double> kernel_agreement_factor(TranslationType type, const CurveFn& f,
                                              const CurveFn& g, double s, double t) {
    const double ref = residual_for_type(type, f, g, s, t);
    if (std::abs(ref) <= 1e-12) return std::nullopt;
    const TranslationSurface surf = build_surface(type, f, g);
    return minimality_residual(surf.immersion, s, t) / ref;
}

}  // namespace sol3
