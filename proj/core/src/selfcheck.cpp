#include "sol3/selfcheck.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <random>

#include "sol3/families.hpp"
#include "sol3/geometry.hpp"
#include "sol3/numerics.hpp"
#include "sol3/solutions.hpp"
#include "sol3/surface.hpp"
#include "sol3/verify.hpp"

namespace sol3 {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// Accumulates the parts of one check; pass iff every |error| <= tolerance.
class Gauge {
public:
    explicit Gauge(std::optional<double> tol_override) : override_(tol_override) {}

    void add(const std::string& label, double err, double tol) {
        err = std::abs(err);
        if (override_) tol = *override_;
        ++parts_;
        const double ratio = std::isfinite(err) ? err / tol
                                                : std::numeric_limits<double>::infinity();
        if (ratio > worst_ || parts_ == 1) {
            worst_ = ratio;
            worst_label_ = label;
            worst_err_ = err;
            worst_tol_ = tol;
        }
    }

    CheckResult result(int id, const std::string& name) const {
        CheckResult r;
        r.id = id;
        r.name = name;
        r.pass = parts_ > 0 && worst_ <= 1.0;
        r.worst = worst_;
        r.detail = "worst of " + std::to_string(parts_) + ": " + worst_label_ +
                   " err=" + num(worst_err_) + " tol=" + num(worst_tol_);
        return r;
    }

private:
    std::optional<double> override_;
    long parts_ = 0;
    double worst_ = 0.0;
    std::string worst_label_;
    double worst_err_ = 0.0;
    double worst_tol_ = 0.0;
};

struct Draw {
    std::mt19937_64 rng;

    explicit Draw(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    double signed_mag(double lo, double hi) {
        const double m = uniform(lo, hi);
        return (rng() & 1) ? m : -m;
    }
    std::vector<double> coeffs(int n, double lo, double hi) {
        std::vector<double> c(n);
        for (auto& v : c) v = uniform(lo, hi);
        return c;
    }

    // One curve from the user-facing catalog; the Scherk profile included.
    CurveFn curve() {
        switch (rng() % 12) {
            case 0: return curves::constant(uniform(-1.0, 1.0));
            case 1:
            case 2: return curves::affine(signed_mag(0.2, 2.0), uniform(-1.0, 1.0));
            case 3:
            case 4: return curves::poly(coeffs(3, -1.0, 1.0));
            case 5:
            case 6: return curves::poly(coeffs(4, -1.0, 1.0));
            case 7:
            case 8: return curves::log_abs(uniform(-0.5, 0.5), uniform(-0.5, 0.5));
            case 9:
            case 10: return curves::neg_log_abs(uniform(-0.5, 0.5), uniform(-0.5, 0.5));
            default:
                return scherk_curve(
                    ScherkState::from_slope(signed_mag(0.5, 2.0), uniform(0.5, 2.0)));
        }
    }

    double param_avoiding(const CurveFn& c, double lo, double hi) {
        for (int k = 0; k < 200; ++k) {
            const double u = uniform(lo, hi);
            bool ok = c.domain.contains(u);
            for (double e : c.excluded) ok = ok && std::abs(u - e) > 0.05;
            if (ok) return u;
        }
        throw std::runtime_error("param_avoiding: no admissible parameter found");
    }
};

// ---- criterion 1: FD Christoffel symbols vs the connection table ----------

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 invert3(const Mat3& m) {
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    Mat3 inv;
    inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
    inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
    inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
    inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
    inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
    inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
    inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
    inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
    inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
    return inv;
}

CoordVector basis_vector(int a) {
    return {a == 0 ? 1.0 : 0.0, a == 1 ? 1.0 : 0.0, a == 2 ? 1.0 : 0.0};
}

Point shifted(const Point& p, int axis, double h) {
    Point q = p;
    if (axis == 0) q.x += h;
    if (axis == 1) q.y += h;
    if (axis == 2) q.z += h;
    return q;
}

Mat3 metric_matrix(const Point& p) {
    Mat3 g;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            g[a][b] = metric(p, basis_vector(a), basis_vector(b));
        }
    }
    return g;
}

// Christoffel symbols of the metric treated as a black box, by central
// differences of the component functions.
std::array<Mat3, 3> fd_christoffel(const Point& p) {
    const std::array<double, 3> coords{p.x, p.y, p.z};
    std::array<Mat3, 3> dg;  // dg[c][a][b] = d_c g_ab
    for (int c = 0; c < 3; ++c) {
        const double h = fd_step(coords[c]);
        const Mat3 plus = metric_matrix(shifted(p, c, h));
        const Mat3 minus = metric_matrix(shifted(p, c, -h));
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                dg[c][a][b] = (plus[a][b] - minus[a][b]) / (2.0 * h);
            }
        }
    }
    const Mat3 ginv = invert3(metric_matrix(p));
    std::array<Mat3, 3> gamma;  // gamma[k][a][b]
    for (int k = 0; k < 3; ++k) {
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                double acc = 0.0;
                for (int l = 0; l < 3; ++l) {
                    acc += ginv[k][l] * (dg[a][b][l] + dg[b][a][l] - dg[l][a][b]);
                }
                gamma[k][a][b] = 0.5 * acc;
            }
        }
    }
    return gamma;
}

CoordVector frame_field_coord(const Point& q, int j) {
    FrameVector unit{j == 1 ? 1.0 : 0.0, j == 2 ? 1.0 : 0.0, j == 3 ? 1.0 : 0.0};
    return frame_to_coord(q, unit);
}

// nabla_{E_i} E_j at p from the FD Christoffels and an FD directional
// derivative of the frame components; independent of the connection table.
FrameVector fd_frame_connection(const Point& p, int i, int j) {
    const auto gamma = fd_christoffel(p);
    const CoordVector dir = frame_field_coord(p, i);
    const CoordVector Ej = frame_field_coord(p, j);
    const double h = 1e-5;
    const Point qp{p.x + h * dir.dx, p.y + h * dir.dy, p.z + h * dir.dz};
    const Point qm{p.x - h * dir.dx, p.y - h * dir.dy, p.z - h * dir.dz};
    const CoordVector Ejp = frame_field_coord(qp, j);
    const CoordVector Ejm = frame_field_coord(qm, j);
    const std::array<double, 3> dEj{(Ejp.dx - Ejm.dx) / (2.0 * h),
                                    (Ejp.dy - Ejm.dy) / (2.0 * h),
                                    (Ejp.dz - Ejm.dz) / (2.0 * h)};
    const std::array<double, 3> u{dir.dx, dir.dy, dir.dz};
    const std::array<double, 3> v{Ej.dx, Ej.dy, Ej.dz};
    std::array<double, 3> out{};
    for (int k = 0; k < 3; ++k) {
        double acc = dEj[k];
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                acc += u[a] * v[b] * gamma[k][a][b];
            }
        }
        out[k] = acc;
    }
    return coord_to_frame(p, {out[0], out[1], out[2]});
}

CheckResult check_connection_oracle(Draw& draw, std::optional<double> tol_override) {
    Gauge gauge(tol_override);
    const double tol = 1e-6;
    for (int n = 0; n < 100; ++n) {
        const Point p{draw.uniform(-3.0, 3.0), draw.uniform(-3.0, 3.0),
                      draw.uniform(-3.0, 3.0)};
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                const FrameVector fd = fd_frame_connection(p, i, j);
                const FrameVector table = connection(i, j);
                const FrameVector diff = fd - table;
                const double err =
                    std::max({std::abs(diff.v1), std::abs(diff.v2), std::abs(diff.v3)});
                gauge.add("entry(" + std::to_string(i) + "," + std::to_string(j) + ")",
                          err, tol);
            }
        }
    }
    return gauge.result(1, "connection-table vs FD-Christoffel oracle");
}

// ---- criteria 2-4: kernel residual vs the closed-form residuals -----------

CheckResult check_type_identity(Draw& draw, std::optional<double> tol_override,
                                TranslationType type, int id, double expected_sign_exp_f) {
    Gauge gauge(tol_override);
    const double tol = 1e-9;
    int done = 0;
    while (done < 1000) {
        const CurveFn f = draw.curve();
        const CurveFn g = draw.curve();
        double s, t, ref, ker;
        try {
            s = draw.param_avoiding(f, -1.5, 1.5);
            t = draw.param_avoiding(g, -1.5, 1.5);
            ref = residual_for_type(type, f, g, s, t);
            ker = minimality_residual(build_surface(type, f, g).immersion, s, t);
        } catch (const SingularPoint&) {
            continue;  // degenerate draw (e.g. both curves constant)
        }
        ++done;
        if (expected_sign_exp_f == 0.0) {
            // factor 1 families
            if (std::abs(ref) > 1e-12) {
                gauge.add("relative", std::abs(ker - ref) / std::abs(ref), tol);
            } else {
                gauge.add("zero-branch", std::abs(ker), tol);
            }
        } else {
            // type III: kernel = -e^{f(s)} * reference
            if (std::abs(ref) > 1e-9) {
                const double ef = std::exp(f.value(s));
                gauge.add("factor", std::abs(ker / ref + ef) / ef, tol);
            }
        }
    }
    const std::string name = expected_sign_exp_f == 0.0
                                 ? "type-" + to_string(type) + " residual identity"
                                 : "type-III residual proportionality (-e^f)";
    return gauge.result(id, name);
}

// ---- criterion 5: catalog minimality ---------------------------------------

SolutionSpec random_spec(Draw& draw, const std::string& name) {
    if (name == "plane-x") return PlaneX{draw.uniform(-2.0, 2.0)};
    if (name == "plane-y") return PlaneY{draw.uniform(-2.0, 2.0)};
    if (name == "plane-z") return PlaneZ{draw.uniform(-2.0, 2.0)};
    if (name == "plane-geodesic") {
        double a = 0.0, b = 0.0;
        while (a * a + b * b < 0.09) {
            a = draw.uniform(-2.0, 2.0);
            b = draw.uniform(-2.0, 2.0);
        }
        return GeodesicPlane{a, b, draw.uniform(-1.0, 1.0)};
    }
    if (name == "type1-scherk") {
        return TypeIScherk{draw.signed_mag(0.5, 2.0), draw.uniform(-1.0, 1.0),
                           draw.uniform(0.5, 2.0)};
    }
    if (name == "type2-log") {
        return TypeIILogConstF{draw.uniform(-1.0, 1.0), draw.uniform(-0.5, 0.5),
                               draw.uniform(-0.75, 0.75)};
    }
    if (name == "type2-scherk") {
        return TypeIIScherk{draw.signed_mag(0.5, 2.0), draw.uniform(-1.0, 1.0),
                            draw.uniform(0.5, 2.0)};
    }
    if (name == "type3-log") {
        return TypeIIIConstFLog{draw.uniform(-1.0, 1.0), draw.uniform(-0.5, 0.5),
                                draw.uniform(-0.75, 0.75)};
    }
    if (name == "type3-neglog") {
        return TypeIIILogConstG{draw.uniform(-0.5, 0.5), draw.uniform(-0.75, 0.75),
                                draw.uniform(-1.0, 1.0)};
    }
    if (name == "type3-logt") {
        return TypeIIILogTAnyF{draw.uniform(-0.75, 0.75),
                               curves::poly(draw.coeffs(4, -0.5, 0.5))};
    }
    if (name == "invariant-log") {
        return InvariantLog{draw.uniform(-1.0, 1.0), draw.uniform(-1.0, 1.0)};
    }
    throw std::logic_error("random_spec: unknown name " + name);
}

CheckResult check_catalog_minimality(Draw& draw, std::optional<double> tol_override) {
    Gauge gauge(tol_override);
    const double tol = 1e-8;
    for (const auto& name : solution_catalog()) {
        for (int k = 0; k < 20; ++k) {
            const Immersion imm = materialize(random_spec(draw, name));
            const VerifyReport rep = verify_surface(imm, default_grid(imm), tol);
            gauge.add(name + "#" + std::to_string(k), rep.max_abs_H, tol);
        }
    }
    return gauge.result(5, "catalog minimality (20 draws per variant, 50x50 grids)");
}

// ---- criterion 6: non-minimal witness --------------------------------------

CheckResult check_witness(std::optional<double> tol_override) {
    Gauge gauge(tol_override);
    const auto surf =
        build_surface(TranslationType::I, curves::affine(1.0, 0.0), curves::affine(1.0, 0.0));
    const double expected = std::exp(-2.0) - std::exp(2.0);
    const double ker = minimality_residual(surf.immersion, 0.0, 1.0);
    gauge.add("kernel residual vs e^{-2}-e^2",
              std::abs(ker - expected) / std::abs(expected), 1e-9);
    const double h_an = mean_curvature(surf.immersion, 0.0, 1.0).H;
    const double h_fd = fd_mean_curvature(surf.immersion, 0.0, 1.0);
    gauge.add("FD oracle confirmation", std::abs(h_fd - h_an), 1e-5);
    return gauge.result(6, "non-minimal witness f=s, g=t at (0,1)");
}

// ---- criterion 7: the Scherk special function ------------------------------

CheckResult check_scherk_function(std::optional<double> tol_override) {
    Gauge gauge(tol_override);
    gauge.add("I(0) exactly zero", std::abs(scherk_I(0.0)), 1e-300);
    for (int i = 0; i < 100; ++i) {
        const double u = -10.0 + 20.0 * i / 99.0;
        gauge.add("roundtrip u=" + num(u), std::abs(scherk_I(scherk_I_inv(u)) - u), 1e-10);
    }
    for (int i = 1; i <= 25; ++i) {
        const double t = 10.0 * i / 25.0;
        gauge.add("oddness t=" + num(t), std::abs(scherk_I(-t) + scherk_I(t)), 1e-12);
    }
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
        gauge.add("two rules t=" + num(t), std::abs(scherk_I(t) - scherk_I_gauss(t)),
                  1e-10);
    }
    return gauge.result(7, "Scherk integral: roundtrip, oddness, two quadrature rules");
}

// ---- criterion 8: zeta ODE and the reduction identity ----------------------

CheckResult check_zeta_ode(std::optional<double> tol_override) {
    Gauge gauge(tol_override);
    const double tol = 1e-9;
    const std::array<std::pair<double, double>, 3> cases{
        {{2.0, 1.0}, {-1.5, 0.7}, {0.5, 2.0}}};
    for (const auto& [a, c] : cases) {
        const ScherkState st = ScherkState::from_slope(a, c);
        for (int i = 0; i <= 60; ++i) {
            const double t = -3.0 + 6.0 * i / 60.0;
            const ProfileJet j = scherk_g(t, st);
            const auto [second_order, first_integral] =
                zeta_ode_residuals(2.0 * (j.g - st.shift), 2.0 * j.dg, 2.0 * j.ddg, c);
            gauge.add("2nd-order t=" + num(t), second_order, tol);
            gauge.add("1st-integral t=" + num(t), first_integral, tol);
            const double lhs = std::exp(2.0 * j.g) * (j.ddg + j.dg * j.dg);
            const double rhs = a * a * std::exp(-2.0 * j.g) * (-j.ddg + j.dg * j.dg);
            gauge.add("reduction t=" + num(t), lhs - rhs, tol);
        }
    }
    return gauge.result(8, "zeta ODE residuals and the f''=0 reduction identity");
}

// ---- criterion 9: arbitrary f with g = log|t| + mu --------------------------

CheckResult check_logt_any_f(Draw& draw, std::optional<double> tol_override) {
    Gauge gauge(tol_override);
    const double tol = 1e-8;
    for (int k = 0; k < 5; ++k) {
        TypeIIILogTAnyF spec{draw.uniform(-0.75, 0.75), curves::poly(draw.coeffs(4, -0.5, 0.5))};
        const Immersion imm = materialize(SolutionSpec{spec});
        GridSpec grid = default_grid(imm);
        grid.t = {0.1, 3.0};
        const VerifyReport rep = verify_surface(imm, grid, tol);
        gauge.add("cubic #" + std::to_string(k), rep.max_abs_H, tol);
    }
    return gauge.result(9, "g=log|t|+mu minimal for random cubic f");
}

// ---- criterion 10: isometry invariance of H --------------------------------

CheckResult check_isometry_invariance(Draw& draw, std::optional<double> tol_override) {
    Gauge gauge(tol_override);
    const double tol = 1e-8;
    std::vector<std::pair<std::string, Immersion>> surfaces;
    surfaces.emplace_back("type1-scherk", materialize(SolutionSpec{TypeIScherk{}}));
    surfaces.emplace_back("invariant-log", materialize(SolutionSpec{InvariantLog{0.3, -0.2}}));
    surfaces.emplace_back(
        "type3-logt", materialize(SolutionSpec{TypeIIILogTAnyF{
                          0.1, curves::poly({0.2, -0.5, 0.0, 0.4})}}));
    surfaces.emplace_back("type-I f=s g=t",
                          build_surface(TranslationType::I, curves::affine(1.0, 0.0),
                                        curves::affine(1.0, 0.0))
                              .immersion);
    surfaces.emplace_back("type-V generic",
                          build_surface(TranslationType::V, curves::affine(1.2, 0.3),
                                        curves::poly({0.2, -0.4, 0.3}))
                              .immersion);
    (void)draw;
    const std::array<IsometryKind, 3> kinds{IsometryKind::translate_x,
                                            IsometryKind::translate_y,
                                            IsometryKind::shear_z};
    for (const auto& [label, imm] : surfaces) {
        const ParamDomain& dom = imm.domain();
        for (IsometryKind kind : kinds) {
            for (double c : {-1.0, 0.5, 2.0}) {
                const Immersion moved = transformed(imm, {kind, c});
                for (int i = 1; i <= 4; ++i) {
                    for (int j = 1; j <= 4; ++j) {
                        const double s = dom.s.lo + (dom.s.hi - dom.s.lo) * i / 5.0;
                        const double t = dom.t.lo + (dom.t.hi - dom.t.lo) * j / 5.0;
                        if (!dom.contains(s, t)) continue;
                        const double h0 = mean_curvature(imm, s, t).H;
                        const double h1 = mean_curvature(moved, s, t).H;
                        gauge.add(label + " c=" + num(c), h1 - h0, tol);
                    }
                }
            }
        }
    }
    return gauge.result(10, "mean curvature invariant under the isometry families");
}

// ---- criterion 11: FD oracle agreement across analytic families ------------

CheckResult check_fd_oracle(Draw& draw, std::optional<double> tol_override) {
    Gauge gauge(tol_override);
    const double tol = 1e-5;
    std::vector<std::pair<std::string, Immersion>> surfaces;
    for (const auto& name : solution_catalog()) {
        surfaces.emplace_back(name, materialize(make_solution(name)));
    }
    for (TranslationType type : {TranslationType::I, TranslationType::II,
                                 TranslationType::III, TranslationType::IV,
                                 TranslationType::V, TranslationType::VI}) {
        surfaces.emplace_back("type-" + to_string(type) + " generic",
                              build_surface(type, curves::poly({0.3, 0.8, -0.2}),
                                            curves::poly({-0.1, 0.6, 0.15}))
                                  .immersion);
    }
    (void)draw;
    for (const auto& [label, imm] : surfaces) {
        const ParamDomain& dom = imm.domain();
        for (const auto& frac : {std::pair{0.23, 0.37}, {0.55, 0.72}, {0.81, 0.16}}) {
            const double s = dom.s.lo + (dom.s.hi - dom.s.lo) * frac.first;
            const double t = dom.t.lo + (dom.t.hi - dom.t.lo) * frac.second;
            if (!dom.contains(s, t)) continue;
            const double h_an = mean_curvature(imm, s, t).H;
            const double h_fd = fd_mean_curvature(imm, s, t);
            gauge.add(label, h_fd - h_an, tol);
        }
    }
    return gauge.result(11, "FD mean-curvature oracle vs analytic evaluation");
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const SelfCheckOptions& opts) {
    Draw draw(opts.seed);
    std::vector<CheckResult> out;
    out.push_back(check_connection_oracle(draw, opts.tol_override));
    out.push_back(check_type_identity(draw, opts.tol_override, TranslationType::I, 2, 0.0));
    out.push_back(check_type_identity(draw, opts.tol_override, TranslationType::II, 3, 0.0));
    out.push_back(check_type_identity(draw, opts.tol_override, TranslationType::III, 4, 1.0));
    out.push_back(check_catalog_minimality(draw, opts.tol_override));
    out.push_back(check_witness(opts.tol_override));
    out.push_back(check_scherk_function(opts.tol_override));
    out.push_back(check_zeta_ode(opts.tol_override));
    out.push_back(check_logt_any_f(draw, opts.tol_override));
    out.push_back(check_isometry_invariance(draw, opts.tol_override));
    out.push_back(check_fd_oracle(draw, opts.tol_override));
    return out;
}

}  // namespace sol3
