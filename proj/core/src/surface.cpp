#include "sol3/surface.hpp"

#include <cmath>

#include "sol3/numerics.hpp"

namespace sol3 {

namespace {

constexpr double kSingularRel = 1e-12;

CoordVector sub(const Point& a, const Point& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
CoordVector scale(double s, const CoordVector& u) {
    return {s * u.dx, s * u.dy, s * u.dz};
}
CoordVector add(const CoordVector& a, const CoordVector& b) {
    return {a.dx + b.dx, a.dy + b.dy, a.dz + b.dz};
}

SurfaceJet fd_jet(const Immersion::PositionFn& pos, const ParamDomain& dom,
                  double s, double t) {
    const double hs = fd_step(s), ht = fd_step(t);
    const double Hs = fd_step2(s), Ht = fd_step2(t);
    const double rs = std::max(hs, Hs), rt = std::max(ht, Ht);
    if (!dom.contains(s - rs, t - rt) || !dom.contains(s + rs, t + rt)) {
        throw std::domain_error("fd_jet: stencil crosses a domain exclusion");
    }
    SurfaceJet j;
    j.x = pos(s, t);
    j.xs = scale(1.0 / (2.0 * hs), sub(pos(s + hs, t), pos(s - hs, t)));
    j.xt = scale(1.0 / (2.0 * ht), sub(pos(s, t + ht), pos(s, t - ht)));
    j.xss = scale(1.0 / (Hs * Hs),
                  add(sub(pos(s + Hs, t), j.x), sub(pos(s - Hs, t), j.x)));
    j.xtt = scale(1.0 / (Ht * Ht),
                  add(sub(pos(s, t + Ht), j.x), sub(pos(s, t - Ht), j.x)));
    j.xst = scale(1.0 / (4.0 * Hs * Ht),
                  add(sub(pos(s + Hs, t + Ht), pos(s + Hs, t - Ht)),
                      sub(pos(s - Hs, t - Ht), pos(s - Hs, t + Ht))));
    return j;
}

// Derivative of coord_to_frame(x, V) along a parameter direction, given the
// coordinate derivative dV of V and the z-velocity zw of the base point:
//   d/dw (e^z V.dx, e^{-z} V.dy, V.dz)
//     = (e^z (dV.dx + V.dx zw), e^{-z} (dV.dy - V.dy zw), dV.dz).
FrameVector frame_component_derivative(const Point& x, const CoordVector& V,
                                       const CoordVector& dV, double zw) {
    const double ez = std::exp(x.z);
    return {ez * (dV.dx + V.dx * zw), (dV.dy - V.dy * zw) / ez, dV.dz};
}

struct KernelState {
    FrameVector e1, e2;
    FirstForm ff;
    FrameVector N;          // e1 x e2
    FrameVector d11, d12, d21, d22;
};

KernelState kernel_state(const SurfaceJet& j) {
    KernelState k;
    k.e1 = coord_to_frame(j.x, j.xs);
    k.e2 = coord_to_frame(j.x, j.xt);
    k.ff = {dot(k.e1, k.e1), dot(k.e1, k.e2), dot(k.e2, k.e2)};
    k.N = cross(k.e1, k.e2);
    const double zs = j.xs.dz, zt = j.xt.dz;
    k.d11 = ambient_covariant_derivative(
        k.e1, k.e1, frame_component_derivative(j.x, j.xs, j.xss, zs));
    k.d12 = ambient_covariant_derivative(
        k.e1, k.e2, frame_component_derivative(j.x, j.xt, j.xst, zs));
    k.d21 = ambient_covariant_derivative(
        k.e2, k.e1, frame_component_derivative(j.x, j.xs, j.xst, zt));
    k.d22 = ambient_covariant_derivative(
        k.e2, k.e2, frame_component_derivative(j.x, j.xt, j.xtt, zt));
    return k;
}

void check_regular(const FirstForm& ff) {
    // det/(EG) = sin^2 of the angle between e1 and e2: a scale-free
    // degeneracy measure that stays sane on anisotropic first forms
    // (E tiny, G huge near log singular lines).
    if (!(ff.det() >= kSingularRel * ff.E * ff.G)) {
        throw SingularPoint("surface_kernel: singular point (EG - F^2 degenerate)");
    }
}

CurvatureReport report_from_state(const KernelState& k) {
    check_regular(k.ff);
    CurvatureReport r;
    r.det1 = k.ff.det();
    r.norm_N = norm(k.N);
    const double l = dot(k.N, k.d11);
    const double m = dot(k.N, k.d12);
    const double n = dot(k.N, k.d22);
    r.residual = k.ff.G * l - 2.0 * k.ff.F * m + k.ff.E * n;
    r.H = r.residual / (2.0 * r.det1 * r.norm_N);
    return r;
}

}  // namespace

bool ParamDomain::contains(double sv, double tv) const {
    if (!s_valid.contains(sv) || !t_valid.contains(tv)) return false;
    for (double e : s_excluded) {
        if (std::abs(sv - e) < margin) return false;
    }
    for (double e : t_excluded) {
        if (std::abs(tv - e) < margin) return false;
    }
    return true;
}

Immersion Immersion::analytic(PositionFn pos, JetFn jet, ParamDomain dom) {
    Immersion imm;
    imm.pos_ = std::move(pos);
    imm.jet_ = std::move(jet);
    imm.domain_ = std::move(dom);
    return imm;
}

Immersion Immersion::from_position(PositionFn pos, ParamDomain dom) {
    Immersion imm;
    imm.pos_ = std::move(pos);
    imm.domain_ = std::move(dom);
    return imm;
}

Point Immersion::position(double s, double t) const {
    return pos_(s, t);
}

SurfaceJet Immersion::jet(double s, double t) const {
    if (jet_) return jet_(s, t);
    return fd_jet(pos_, domain_, s, t);
}

Immersion Immersion::with_fd_derivatives() const {
    return from_position(pos_, domain_);
}

Immersion Immersion::with_domain(ParamDomain dom) const {
    Immersion imm = *this;
    imm.domain_ = std::move(dom);
    return imm;
}

std::pair<FrameVector, FrameVector> tangent_frame(const Immersion& imm, double s, double t) {
    const SurfaceJet j = imm.jet(s, t);
    const FrameVector e1 = coord_to_frame(j.x, j.xs);
    const FrameVector e2 = coord_to_frame(j.x, j.xt);
    check_regular({dot(e1, e1), dot(e1, e2), dot(e2, e2)});
    return {e1, e2};
}

FirstForm first_form(const Immersion& imm, double s, double t) {
    const SurfaceJet j = imm.jet(s, t);
    const FrameVector e1 = coord_to_frame(j.x, j.xs);
    const FrameVector e2 = coord_to_frame(j.x, j.xt);
    return {dot(e1, e1), dot(e1, e2), dot(e2, e2)};
}

FrameVector normal_scaled(const Immersion& imm, double s, double t) {
    const SurfaceJet j = imm.jet(s, t);
    return cross(coord_to_frame(j.x, j.xs), coord_to_frame(j.x, j.xt));
}

FrameVector surface_covariant(const Immersion& imm, double s, double t, int i, int j) {
    if (i < 1 || i > 2 || j < 1 || j > 2) {
        throw std::out_of_range("surface_covariant: tangent indices must be 1 or 2");
    }
    const KernelState k = kernel_state(imm.jet(s, t));
    if (i == 1) return j == 1 ? k.d11 : k.d12;
    return j == 1 ? k.d21 : k.d22;
}

SecondFormScaled second_form_scaled(const Immersion& imm, double s, double t) {
    const KernelState k = kernel_state(imm.jet(s, t));
    check_regular(k.ff);
    return {dot(k.N, k.d11), dot(k.N, k.d12), dot(k.N, k.d22)};
}

double minimality_residual(const Immersion& imm, double s, double t) {
    const KernelState k = kernel_state(imm.jet(s, t));
    check_regular(k.ff);
    return k.ff.G * dot(k.N, k.d11) - 2.0 * k.ff.F * dot(k.N, k.d12) +
           k.ff.E * dot(k.N, k.d22);
}

CurvatureReport mean_curvature(const Immersion& imm, double s, double t) {
    return report_from_state(kernel_state(imm.jet(s, t)));
}

double fd_mean_curvature(const Immersion& imm, double s, double t) {
    const Immersion fd = imm.with_fd_derivatives();
    return report_from_state(kernel_state(fd.jet(s, t))).H;
}

Immersion transformed(const Immersion& imm, const IsometryElement& iso) {
    const auto pos = [imm, iso](double s, double t) {
        return apply_isometry(iso, imm.position(s, t));
    };
    if (!imm.analytic_derivatives()) {
        return Immersion::from_position(pos, imm.domain());
    }
    const auto jet = [imm, iso](double s, double t) {
        SurfaceJet j = imm.jet(s, t);
        j.x = apply_isometry(iso, j.x);
        j.xs = apply_isometry_differential(iso, j.xs);
        j.xt = apply_isometry_differential(iso, j.xt);
        j.xss = apply_isometry_differential(iso, j.xss);
        j.xst = apply_isometry_differential(iso, j.xst);
        j.xtt = apply_isometry_differential(iso, j.xtt);
        return j;
    };
    return Immersion::analytic(pos, jet, imm.domain());
}

Immersion swapped(const Immersion& imm) {
    ParamDomain dom = imm.domain();
    std::swap(dom.s, dom.t);
    std::swap(dom.s_valid, dom.t_valid);
    std::swap(dom.s_excluded, dom.t_excluded);
    const auto pos = [imm](double s, double t) { return imm.position(t, s); };
    if (!imm.analytic_derivatives()) {
        return Immersion::from_position(pos, dom);
    }
    const auto jet = [imm](double s, double t) {
        const SurfaceJet j = imm.jet(t, s);
        SurfaceJet r;
        r.x = j.x;
        r.xs = j.xt;
        r.xt = j.xs;
        r.xss = j.xtt;
        r.xst = j.xst;
        r.xtt = j.xss;
        return r;
    };
    return Immersion::analytic(pos, jet, dom);
}

}  // namespace sol3
