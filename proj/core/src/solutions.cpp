#include "sol3/solutions.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "sol3/numerics.hpp"

namespace sol3 {

namespace {

double sqrt_cosh(double tau) { return std::sqrt(std::cosh(tau)); }

double read_env_tol() {
    const char* raw = std::getenv("SOL3_QUAD_TOL");
    if (raw == nullptr || *raw == '\0') return 1e-12;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) return 1e-12;
    return v;
}

// Root of I(v) = u for u >= 0. The integrand is pinched between
// e^{tau/2}/sqrt(2) and e^{tau/2}, which gives the two-sided bracket
//   2 log1p(u/2)  <=  v  <=  min(u, 2 log1p(u/sqrt(2)))
// of width at most log 2; safeguarded Newton finishes it off. Every
// residual uses a fresh integral from 0 (no error accumulation).
double invert_nonneg(double u, double qtol) {
    if (u == 0.0) return 0.0;
    double lo = 2.0 * std::log1p(0.5 * u);
    if (lo > kMaxAbsZ) {
        throw std::domain_error("scherk_I_inv: result beyond the |t| <= 300 guard");
    }
    double hi = std::min({u, 2.0 * std::log1p(u / std::sqrt(2.0)), kMaxAbsZ});
    const double target = std::max(1e-12, 4.0 * std::numeric_limits<double>::epsilon() * u);
    double v = hi;
    for (int iter = 0; iter < 80; ++iter) {
        const double Iv = adaptive_simpson(sqrt_cosh, 0.0, v, qtol);
        const double err = Iv - u;
        if (iter == 0 && hi == kMaxAbsZ && err < 0.0) {
            throw std::domain_error("scherk_I_inv: argument beyond I(300)");
        }
        if (std::abs(err) <= target) return v;
        if (err > 0.0) hi = v; else lo = v;
        double vn = v - err / sqrt_cosh(v);
        if (!(vn > lo && vn < hi)) vn = 0.5 * (lo + hi);
        if (vn == v) return v;  // bracket exhausted at double resolution
        v = vn;
    }
    throw std::runtime_error("scherk_I_inv: iteration cap exceeded");
}

struct ScherkProfileState {
    ScherkState st;
    ScherkIntegral cfg;
    ProfileJet at(double t) const { return scherk_g(t, st, cfg); }
};

Immersion plane_immersion(Point origin, CoordVector ds, CoordVector dt) {
    const auto pos = [origin, ds, dt](double s, double t) {
        return Point{origin.x + s * ds.dx + t * dt.dx,
                     origin.y + s * ds.dy + t * dt.dy,
                     origin.z + s * ds.dz + t * dt.dz};
    };
    const auto jet = [pos, ds, dt](double s, double t) {
        SurfaceJet j;
        j.x = pos(s, t);
        j.xs = ds;
        j.xt = dt;
        return j;
    };
    return Immersion::analytic(pos, jet, ParamDomain{});
}

}  // namespace

ScherkIntegral ScherkIntegral::defaults() {
    static const double tol = read_env_tol();
    return ScherkIntegral{tol};
}

double scherk_I(double t, const ScherkIntegral& cfg) {
    if (!(std::abs(t) <= kMaxAbsZ)) {
        throw std::domain_error("scherk_I: |t| > 300 exceeds the exponent guard");
    }
    return adaptive_simpson(sqrt_cosh, 0.0, t, cfg.tol);
}

double scherk_I_gauss(double t) {
    if (!(std::abs(t) <= kMaxAbsZ)) {
        throw std::domain_error("scherk_I_gauss: |t| > 300 exceeds the exponent guard");
    }
    return gauss_legendre(sqrt_cosh, 0.0, t);
}

double scherk_I_inv(double u, const ScherkIntegral& cfg) {
    if (!std::isfinite(u)) throw std::domain_error("scherk_I_inv: non-finite argument");
    const double v = invert_nonneg(std::abs(u), cfg.tol);
    return u < 0.0 ? -v : v;  // I is odd
}

ScherkState ScherkState::from_slope(double a, double c, int branch, double t_offset) {
    if (!(a != 0.0) || !std::isfinite(a)) {
        throw std::invalid_argument("ScherkState: slope a must be nonzero");
    }
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("ScherkState: first-integral constant c must be > 0");
    }
    if (branch != 1 && branch != -1) {
        throw std::invalid_argument("ScherkState: branch must be +1 or -1");
    }
    return ScherkState{c, a, 0.5 * std::log(std::abs(a)), branch, t_offset};
}

ProfileJet scherk_g(double t, const ScherkState& st, const ScherkIntegral& cfg) {
    const double zeta = scherk_I_inv(st.branch * st.c * (t + st.t_offset), cfg);
    const double ch = std::cosh(zeta);
    const double root = std::sqrt(ch);
    ProfileJet out;
    out.g = 0.5 * zeta + st.shift;
    out.dg = st.branch * st.c / (2.0 * root);
    out.ddg = -(st.c * st.c / 4.0) * std::sinh(zeta) / (ch * ch);
    return out;
}

std::pair<double, double> zeta_ode_residuals(double zeta, double dzeta, double ddzeta,
                                             double c) {
    const double ch = std::cosh(zeta);
    return {2.0 * ddzeta * ch + dzeta * dzeta * std::sinh(zeta),
            dzeta * dzeta - c * c / ch};
}

CurveFn scherk_curve(const ScherkState& st, const ScherkIntegral& cfg) {
    const ScherkProfileState prof{st, cfg};
    CurveFn c;
    c.value = [prof](double t) { return prof.at(t).g; };
    c.deriv = [prof](double t) { return prof.at(t).dg; };
    c.deriv2 = [prof](double t) { return prof.at(t).ddg; };
    return c;
}

Immersion materialize(const SolutionSpec& spec, const ScherkIntegral& cfg) {
    struct Builder {
        const ScherkIntegral& cfg;

        Immersion operator()(const PlaneX& p) const {
            return plane_immersion({p.x0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0});
        }
        Immersion operator()(const PlaneY& p) const {
            return plane_immersion({0.0, p.y0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0});
        }
        Immersion operator()(const PlaneZ& p) const {
            return plane_immersion({0.0, 0.0, p.z0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
        }
        Immersion operator()(const GeodesicPlane& p) const {
            if (p.a == 0.0 && p.b == 0.0) {
                throw std::invalid_argument("plane-geodesic: a and b cannot both vanish");
            }
            if (std::abs(p.b) >= std::abs(p.a)) {
                return plane_immersion({0.0, -p.c / p.b, 0.0}, {1.0, -p.a / p.b, 0.0},
                                       {0.0, 0.0, 1.0});
            }
            return plane_immersion({-p.c / p.a, 0.0, 0.0}, {-p.b / p.a, 1.0, 0.0},
                                   {0.0, 0.0, 1.0});
        }
        Immersion operator()(const TypeIScherk& p) const {
            const auto st = ScherkState::from_slope(p.a, p.c, p.branch, p.t_offset);
            return build_surface(TranslationType::I, curves::affine(p.a, p.b),
                                 scherk_curve(st, cfg))
                .immersion;
        }
        Immersion operator()(const TypeIILogConstF& p) const {
            return build_surface(TranslationType::II, curves::constant(p.a),
                                 curves::log_abs(p.lambda, p.mu))
                .immersion;
        }
        Immersion operator()(const TypeIIScherk& p) const {
            const auto st = ScherkState::from_slope(p.a, p.c, p.branch, p.t_offset);
            return build_surface(TranslationType::II, curves::affine(p.a, p.b),
                                 scherk_curve(st, cfg))
                .immersion;
        }
        Immersion operator()(const TypeIIIConstFLog& p) const {
            return build_surface(TranslationType::III, curves::constant(p.a),
                                 curves::log_abs(p.lambda, p.mu))
                .immersion;
        }
        Immersion operator()(const TypeIIILogConstG& p) const {
            return build_surface(TranslationType::III, curves::neg_log_abs(p.lambda, p.mu),
                                 curves::constant(p.a))
                .immersion;
        }
        Immersion operator()(const TypeIIILogTAnyF& p) const {
            Immersion imm = build_surface(TranslationType::III, p.f,
                                          curves::log_abs(0.0, p.mu))
                                .immersion;
            ParamDomain dom = imm.domain();
            // Positive branch, clear of the t = 0 line. The s window is kept
            // moderate so e^{2f} cannot swamp double precision for steep f.
            dom.s = {-1.5, 1.5};
            dom.t = {0.1, 3.0};
            return imm.with_domain(dom);
        }
        Immersion operator()(const InvariantLog& p) const {
            const double lambda = p.lambda, mu = p.mu;
            const auto pos = [lambda, mu](double s, double t) {
                const double arg = t + lambda;
                if (!(arg > 0.0)) {
                    throw std::domain_error("invariant-log: requires t + lambda > 0");
                }
                return Point{s, t, std::log(arg) + mu};
            };
            const auto jet = [pos, lambda](double s, double t) {
                SurfaceJet j;
                j.x = pos(s, t);
                const double arg = t + lambda;
                j.xs = {1.0, 0.0, 0.0};
                j.xt = {0.0, 1.0, 1.0 / arg};
                j.xtt = {0.0, 0.0, -1.0 / (arg * arg)};
                return j;
            };
            ParamDomain dom;
            dom.t = {-lambda + 0.1, -lambda + 4.1};
            dom.t_valid = {-lambda, 1e300};
            dom.t_excluded = {-lambda};
            return Immersion::analytic(pos, jet, dom);
        }
    };
    return std::visit(Builder{cfg}, spec);
}

std::string solution_name(const SolutionSpec& spec) {
    struct Namer {
        std::string operator()(const PlaneX&) const { return "plane-x"; }
        std::string operator()(const PlaneY&) const { return "plane-y"; }
        std::string operator()(const PlaneZ&) const { return "plane-z"; }
        std::string operator()(const GeodesicPlane&) const { return "plane-geodesic"; }
        std::string operator()(const TypeIScherk&) const { return "type1-scherk"; }
        std::string operator()(const TypeIILogConstF&) const { return "type2-log"; }
        std::string operator()(const TypeIIScherk&) const { return "type2-scherk"; }
        std::string operator()(const TypeIIIConstFLog&) const { return "type3-log"; }
        std::string operator()(const TypeIIILogConstG&) const { return "type3-neglog"; }
        std::string operator()(const TypeIIILogTAnyF&) const { return "type3-logt"; }
        std::string operator()(const InvariantLog&) const { return "invariant-log"; }
    };
    return std::visit(Namer{}, spec);
}

std::vector<std::string> solution_catalog() {
    return {"plane-x",     "plane-y",      "plane-z",     "plane-geodesic",
            "type1-scherk", "type2-log",   "type2-scherk", "type3-log",
            "type3-neglog", "type3-logt",  "invariant-log"};
}

SolutionSpec make_solution(const std::string& name, const std::vector<double>& params,
                           const std::optional<CurveFn>& f) {
    const auto arg = [&params](size_t i, double fallback) {
        return i < params.size() ? params[i] : fallback;
    };
    const auto expect_at_most = [&params, &name](size_t n) {
        if (params.size() > n) {
            throw std::invalid_argument("solution '" + name + "' takes at most " +
                                        std::to_string(n) + " parameters");
        }
    };
    if (name == "plane-x") { expect_at_most(1); return PlaneX{arg(0, 0.0)}; }
    if (name == "plane-y") { expect_at_most(1); return PlaneY{arg(0, 0.0)}; }
    if (name == "plane-z") { expect_at_most(1); return PlaneZ{arg(0, 0.0)}; }
    if (name == "plane-geodesic") {
        expect_at_most(3);
        return GeodesicPlane{arg(0, 1.0), arg(1, 1.0), arg(2, 0.0)};
    }
    if (name == "type1-scherk") {
        expect_at_most(3);
        return TypeIScherk{arg(0, 2.0), arg(1, 0.0), arg(2, 1.0)};
    }
    if (name == "type2-log") {
        expect_at_most(3);
        return TypeIILogConstF{arg(0, 1.0), arg(1, 0.5), arg(2, 0.0)};
    }
    if (name == "type2-scherk") {
        expect_at_most(3);
        return TypeIIScherk{arg(0, 2.0), arg(1, 0.0), arg(2, 1.0)};
    }
    if (name == "type3-log") {
        expect_at_most(3);
        return TypeIIIConstFLog{arg(0, 0.0), arg(1, 0.5), arg(2, 0.0)};
    }
    if (name == "type3-neglog") {
        expect_at_most(3);
        return TypeIIILogConstG{arg(0, 0.5), arg(1, 0.0), arg(2, 0.0)};
    }
    if (name == "type3-logt") {
        expect_at_most(1);
        TypeIIILogTAnyF spec;
        spec.mu = arg(0, 0.0);
        if (f) spec.f = *f;
        return spec;
    }
    if (name == "invariant-log") {
        expect_at_most(2);
        return InvariantLog{arg(0, 0.0), arg(1, 0.0)};
    }
    std::string known;
    for (const auto& n : solution_catalog()) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown solution '" + name + "' (catalog: " + known + ")");
}

double g43_residual(const Type3ReductionParams& params, double g, double dg,
                    double /*ddg*/, double t) {
    if (params.a == 0.0) {
        throw std::invalid_argument("g43_residual: reduction constant a must be nonzero");
    }
    const double e2g = std::exp(2.0 * g);
    const double e4g = e2g * e2g;
    const double e6g = e4g * e2g;
    return (params.b - params.a) * dg * dg * e6g +
           (params.a + params.b - 2.0 * params.a * t * dg + dg * dg) * e4g +
           (1.0 + t * t * dg * dg) * e2g + t * t;
}

}  // namespace sol3
