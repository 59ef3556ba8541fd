#pragma once

// Ambient geometry of the Sol3 Lie group: R^3 with the left-invariant metric
//   e^{2z} dx^2 + e^{-2z} dy^2 + dz^2
// and group law (x,y,z)*(x',y',z') = (x + e^{-z}x', y + e^{z}y', z + z').

#include <array>
#include <cmath>
#include <stdexcept>

namespace sol3 {

// Exponent guard: e^{2z} overflows double precision past |z| ~ 354, so any
// operation that would exponentiate a coordinate rejects |z| > 300 loudly.
inline constexpr double kMaxAbsZ = 300.0;

struct Point {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Components in the coordinate basis d/dx, d/dy, d/dz at an implicit base point.
struct CoordVector {
    double dx = 0.0;
    double dy = 0.0;
    double dz = 0.0;
};

// Components in the left-invariant orthonormal frame
//   E1 = e^{-z} d/dx,  E2 = e^{z} d/dy,  E3 = d/dz.
struct FrameVector {
    double v1 = 0.0;
    double v2 = 0.0;
    double v3 = 0.0;
};

inline FrameVector operator+(FrameVector a, FrameVector b) {
    return {a.v1 + b.v1, a.v2 + b.v2, a.v3 + b.v3};
}
inline FrameVector operator-(FrameVector a, FrameVector b) {
    return {a.v1 - b.v1, a.v2 - b.v2, a.v3 - b.v3};
}
inline FrameVector operator*(double s, FrameVector a) {
    return {s * a.v1, s * a.v2, s * a.v3};
}
inline double dot(FrameVector a, FrameVector b) {
    return a.v1 * b.v1 + a.v2 * b.v2 + a.v3 * b.v3;
}
inline FrameVector cross(FrameVector a, FrameVector b) {
    return {a.v2 * b.v3 - a.v3 * b.v2,
            a.v3 * b.v1 - a.v1 * b.v3,
            a.v1 * b.v2 - a.v2 * b.v1};
}
inline double norm(FrameVector a) { return std::sqrt(dot(a, a)); }

bool finite(const Point& p);
bool finite(const CoordVector& u);
bool finite(const FrameVector& v);

// Group structure. Throws std::domain_error on the |z| guard or if a result
// is non-finite.
Point group_mul(const Point& p, const Point& q);
Point group_inv(const Point& p);

// Riemannian metric on coordinate vectors based at p.
double metric(const Point& p, const CoordVector& u, const CoordVector& v);

// Change of basis between the coordinate basis and {E1,E2,E3} at p.
FrameVector coord_to_frame(const Point& p, const CoordVector& u);
CoordVector frame_to_coord(const Point& p, const FrameVector& v);

// Connection table of the frame: connection(i,j) = nabla_{E_i} E_j, constant
// over the group. Indices are 1-based; out of range throws std::out_of_range.
FrameVector connection(int i, int j);

using ConnectionTable = std::array<std::array<FrameVector, 3>, 3>;
ConnectionTable connection_table();

// nabla_U V for frame-component fields, with the directional derivative
// dv = U[v] of v's frame components supplied by the caller:
//   nabla_U V = dv + sum_{i,j} u_i v_j connection(i,j).
FrameVector ambient_covariant_derivative(const FrameVector& u,
                                         const FrameVector& v,
                                         const FrameVector& dv);

// The three one-parameter isometry families generating the identity component.
enum class IsometryKind { translate_x, translate_y, shear_z };

struct IsometryElement {
    IsometryKind kind = IsometryKind::translate_x;
    double c = 0.0;
};

Point apply_isometry(const IsometryElement& iso, const Point& p);

// Differential of the isometry on coordinate vectors. Constant in p for all
// three families (translations are affine, the shear is linear diagonal).
CoordVector apply_isometry_differential(const IsometryElement& iso, const CoordVector& u);

// Killing fields of the three families at p: d/dx, d/dy, -x d/dx + y d/dy + d/dz.
std::array<CoordVector, 3> killing_fields(const Point& p);

}  // namespace sol3
