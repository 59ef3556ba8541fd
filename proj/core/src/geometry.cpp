#include "sol3/geometry.hpp"

#include <cmath>
#include <string>

namespace sol3 {

namespace {

void check_z_range(double z, const char* where) {
    if (!(std::abs(z) <= kMaxAbsZ)) {
        throw std::domain_error(std::string(where) + ": |z| > 300 exceeds the exponent guard");
    }
}

void check_finite(const Point& p, const char* where) {
    if (!finite(p)) {
        throw std::domain_error(std::string(where) + ": non-finite result");
    }
}

}  // namespace

bool finite(const Point& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}
bool finite(const CoordVector& u) {
    return std::isfinite(u.dx) && std::isfinite(u.dy) && std::isfinite(u.dz);
}
bool finite(const FrameVector& v) {
    return std::isfinite(v.v1) && std::isfinite(v.v2) && std::isfinite(v.v3);
}

Point group_mul(const Point& p, const Point& q) {
    check_z_range(p.z, "group_mul");
    Point r{p.x + std::exp(-p.z) * q.x, p.y + std::exp(p.z) * q.y, p.z + q.z};
    check_finite(r, "group_mul");
    return r;
}

Point group_inv(const Point& p) {
    check_z_range(p.z, "group_inv");
    Point r{-std::exp(p.z) * p.x, -std::exp(-p.z) * p.y, -p.z};
    check_finite(r, "group_inv");
    return r;
}

double metric(const Point& p, const CoordVector& u, const CoordVector& v) {
    check_z_range(p.z, "metric");
    const double e2z = std::exp(2.0 * p.z);
    return e2z * u.dx * v.dx + u.dy * v.dy / e2z + u.dz * v.dz;
}

FrameVector coord_to_frame(const Point& p, const CoordVector& u) {
    check_z_range(p.z, "coord_to_frame");
    const double ez = std::exp(p.z);
    return {ez * u.dx, u.dy / ez, u.dz};
}

CoordVector frame_to_coord(const Point& p, const FrameVector& v) {
    check_z_range(p.z, "frame_to_coord");
    const double ez = std::exp(p.z);
    return {v.v1 / ez, v.v2 * ez, v.v3};
}

FrameVector connection(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3) {
        throw std::out_of_range("connection: frame indices must be in 1..3");
    }
    // nabla_{E1}E1 = -E3   nabla_{E1}E3 = E1
    // nabla_{E2}E2 =  E3   nabla_{E2}E3 = -E2
    // all other entries vanish.
    if (i == 1 && j == 1) return {0.0, 0.0, -1.0};
    if (i == 1 && j == 3) return {1.0, 0.0, 0.0};
    if (i == 2 && j == 2) return {0.0, 0.0, 1.0};
    if (i == 2 && j == 3) return {0.0, -1.0, 0.0};
    return {0.0, 0.0, 0.0};
}

ConnectionTable connection_table() {
    ConnectionTable table;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            table[i - 1][j - 1] = connection(i, j);
        }
    }
    return table;
}

FrameVector ambient_covariant_derivative(const FrameVector& u,
                                         const FrameVector& v,
                                         const FrameVector& dv) {
    // Only four table entries are nonzero; the bilinear sum collapses to
    //   (u1 v3, -u2 v3, u2 v2 - u1 v1).
    return {dv.v1 + u.v1 * v.v3,
            dv.v2 - u.v2 * v.v3,
            dv.v3 + u.v2 * v.v2 - u.v1 * v.v1};
}

Point apply_isometry(const IsometryElement& iso, const Point& p) {
    switch (iso.kind) {
        case IsometryKind::translate_x:
            return {p.x + iso.c, p.y, p.z};
        case IsometryKind::translate_y:
            return {p.x, p.y + iso.c, p.z};
        case IsometryKind::shear_z: {
            check_z_range(iso.c, "apply_isometry");
            Point r{std::exp(-iso.c) * p.x, std::exp(iso.c) * p.y, p.z + iso.c};
            check_finite(r, "apply_isometry");
            return r;
        }
    }
    throw std::invalid_argument("apply_isometry: unknown isometry kind");
}

CoordVector apply_isometry_differential(const IsometryElement& iso, const CoordVector& u) {
    switch (iso.kind) {
        case IsometryKind::translate_x:
        case IsometryKind::translate_y:
            return u;
        case IsometryKind::shear_z: {
            check_z_range(iso.c, "apply_isometry_differential");
            return {std::exp(-iso.c) * u.dx, std::exp(iso.c) * u.dy, u.dz};
        }
    }
    throw std::invalid_argument("apply_isometry_differential: unknown isometry kind");
}

std::array<CoordVector, 3> killing_fields(const Point& p) {
    return {CoordVector{1.0, 0.0, 0.0},
            CoordVector{0.0, 1.0, 0.0},
            CoordVector{-p.x, p.y, 1.0}};
}

}  // namespace sol3
