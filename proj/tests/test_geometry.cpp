#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sol3/geometry.hpp"

using namespace sol3;

namespace {

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool close_pt(const Point& a, const Point& b, double tol) {
    return close_rel(a.x, b.x, tol) && close_rel(a.y, b.y, tol) && close_rel(a.z, b.z, tol);
}

Point random_point(std::mt19937_64& rng, double lim = 3.0) {
    std::uniform_real_distribution<double> d(-lim, lim);
    return {d(rng), d(rng), d(rng)};
}

CoordVector random_vec(std::mt19937_64& rng, double lim = 2.0) {
    std::uniform_real_distribution<double> d(-lim, lim);
    return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("group law: identity, explicit products, inverse") {
    const Point e{0, 0, 0};
    CHECK(close_pt(group_mul(e, {1.5, -2.0, 0.7}), {1.5, -2.0, 0.7}, 1e-15));
    CHECK(close_pt(group_mul({1.5, -2.0, 0.7}, e), {1.5, -2.0, 0.7}, 1e-15));

    const Point p = group_mul({1, 2, 3}, {1, 1, 0});
    CHECK(close_pt(p, {1.0 + std::exp(-3.0), 2.0 + std::exp(3.0), 3.0}, 1e-15));

    CHECK(close_pt(group_inv(e), e, 1e-15));
    CHECK(close_pt(group_inv({1, 0, 0}), {-1, 0, 0}, 1e-15));
    CHECK(close_pt(group_inv({1, 2, 3}), {-std::exp(3.0), -2.0 * std::exp(-3.0), -3.0},
                   1e-15));
}

TEST_CASE("group axioms hold on random triples") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 1000; ++k) {
        const Point p = random_point(rng), q = random_point(rng), r = random_point(rng);
        CHECK(close_pt(group_mul(group_mul(p, q), r), group_mul(p, group_mul(q, r)), 1e-12));
        CHECK(close_pt(group_mul(p, group_inv(p)), {0, 0, 0}, 1e-12));
        CHECK(close_pt(group_mul(group_inv(p), p), {0, 0, 0}, 1e-12));
    }
}

TEST_CASE("exponent guard rejects |z| > 300") {
    CHECK_THROWS_AS(group_mul({0, 0, 301}, {1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(group_inv({1, 1, -301}), std::domain_error);
    CHECK_THROWS_AS(metric({0, 0, 400}, {1, 0, 0}, {1, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(coord_to_frame({0, 0, -400}, {1, 0, 0}), std::domain_error);
    // overflow of the product itself is reported, not returned as infinity
    CHECK_THROWS_AS(group_mul({0, 0, 300}, {0, 1e200, 0}), std::domain_error);
}

TEST_CASE("metric values") {
    CHECK(metric({0, 0, 0}, {1, 0, 0}, {1, 0, 0}) == 1.0);
    CHECK(close_rel(metric({0, 0, 1}, {1, 0, 0}, {1, 0, 0}), std::exp(2.0), 1e-15));
    CHECK(metric({0.3, -1.0, 0.8}, {0, 0, 1}, {1, 0, 0}) == 0.0);
}

TEST_CASE("metric is left-invariant") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 500; ++k) {
        const Point p = random_point(rng), q = random_point(rng);
        const CoordVector u = random_vec(rng), v = random_vec(rng);
        // differential of L_p maps (a,b,c) at q to (e^{-p.z}a, e^{p.z}b, c)
        const double em = std::exp(-p.z), ep = std::exp(p.z);
        const CoordVector du{em * u.dx, ep * u.dy, u.dz};
        const CoordVector dv{em * v.dx, ep * v.dy, v.dz};
        CHECK(close_rel(metric(group_mul(p, q), du, dv), metric(q, u, v), 1e-12));
    }
}

TEST_CASE("frame conversion matches the E1,E2,E3 scalings") {
    const FrameVector a = coord_to_frame({0, 0, 0}, {0.3, -1.2, 0.5});
    CHECK(a.v1 == 0.3);
    CHECK(a.v2 == -1.2);
    CHECK(a.v3 == 0.5);

    const double g = 0.7, fp = -1.3;
    const FrameVector b = coord_to_frame({0, 0, g}, {1, fp, 0});
    CHECK(close_rel(b.v1, std::exp(g), 1e-15));
    CHECK(close_rel(b.v2, fp * std::exp(-g), 1e-15));
    CHECK(b.v3 == 0.0);

    std::mt19937_64 rng(43);
    for (int k = 0; k < 200; ++k) {
        const Point p = random_point(rng);
        const CoordVector u = random_vec(rng);
        const FrameVector fu = coord_to_frame(p, u);
        // orthonormality: frame length squared equals the metric value
        CHECK(close_rel(dot(fu, fu), metric(p, u, u), 1e-13));
        // round trip
        const CoordVector back = frame_to_coord(p, fu);
        CHECK(close_rel(back.dx, u.dx, 1e-13));
        CHECK(close_rel(back.dy, u.dy, 1e-13));
        CHECK(close_rel(back.dz, u.dz, 1e-13));
    }
}

TEST_CASE("connection table entries") {
    const auto entry = [](int i, int j) { return connection(i, j); };
    CHECK(entry(1, 1).v3 == -1.0);
    CHECK(entry(1, 1).v1 == 0.0);
    CHECK(dot(entry(1, 2), entry(1, 2)) == 0.0);
    CHECK(entry(1, 3).v1 == 1.0);
    CHECK(entry(2, 2).v3 == 1.0);
    CHECK(entry(2, 3).v2 == -1.0);
    for (int j = 1; j <= 3; ++j) CHECK(dot(entry(3, j), entry(3, j)) == 0.0);
    CHECK(dot(entry(2, 1), entry(2, 1)) == 0.0);
    CHECK_THROWS_AS(connection(0, 1), std::out_of_range);
    CHECK_THROWS_AS(connection(1, 4), std::out_of_range);

    const ConnectionTable table = connection_table();
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const FrameVector diff = table[i - 1][j - 1] - connection(i, j);
            CHECK(dot(diff, diff) == 0.0);
        }
    }
}

TEST_CASE("ambient covariant derivative: table cases and linearity") {
    const FrameVector zero{};
    const FrameVector d11 = ambient_covariant_derivative({1, 0, 0}, {1, 0, 0}, zero);
    CHECK(d11.v1 == 0.0);
    CHECK(d11.v2 == 0.0);
    CHECK(d11.v3 == -1.0);

    const FrameVector dv0 = ambient_covariant_derivative({0.4, -1.0, 2.2}, zero, zero);
    CHECK(dot(dv0, dv0) == 0.0);

    const FrameVector d23 = ambient_covariant_derivative({0, 1, 0}, {0, 0, 1}, zero);
    CHECK(d23.v1 == 0.0);
    CHECK(d23.v2 == -1.0);
    CHECK(d23.v3 == 0.0);
}

TEST_CASE("isometries: examples, identity, additivity, metric preservation") {
    CHECK(close_pt(apply_isometry({IsometryKind::translate_x, 2.0}, {1, 1, 1}), {3, 1, 1},
                   1e-15));
    CHECK(close_pt(apply_isometry({IsometryKind::shear_z, 0.0}, {0.4, -2.0, 1.1}),
                   {0.4, -2.0, 1.1}, 1e-15));
    CHECK(close_pt(apply_isometry({IsometryKind::shear_z, 1.0}, {1, 1, 0}),
                   {std::exp(-1.0), std::exp(1.0), 1.0}, 1e-15));

    std::mt19937_64 rng(44);
    for (IsometryKind kind :
         {IsometryKind::translate_x, IsometryKind::translate_y, IsometryKind::shear_z}) {
        for (int k = 0; k < 100; ++k) {
            std::uniform_real_distribution<double> d(-2.0, 2.0);
            const double c1 = d(rng), c2 = d(rng);
            const Point p = random_point(rng);
            // parameter composes additively within one family
            const Point two_steps =
                apply_isometry({kind, c1}, apply_isometry({kind, c2}, p));
            CHECK(close_pt(two_steps, apply_isometry({kind, c1 + c2}, p), 1e-12));
            // metric preservation under the differential
            const CoordVector u = random_vec(rng), v = random_vec(rng);
            const IsometryElement iso{kind, c1};
            const double before = metric(p, u, v);
            const double after =
                metric(apply_isometry(iso, p), apply_isometry_differential(iso, u),
                       apply_isometry_differential(iso, v));
            CHECK(close_rel(after, before, 1e-12));
        }
    }
}

TEST_CASE("Killing fields") {
    const auto at_origin = killing_fields({0, 0, 0});
    CHECK(at_origin[2].dx == 0.0);
    CHECK(at_origin[2].dy == 0.0);
    CHECK(at_origin[2].dz == 1.0);

    const auto at_p = killing_fields({1, 1, 0});
    CHECK(at_p[2].dx == -1.0);
    CHECK(at_p[2].dy == 1.0);
    CHECK(at_p[2].dz == 1.0);

    // first two fields are point-independent
    const auto at_q = killing_fields({-2.3, 0.4, 1.9});
    CHECK(at_q[0].dx == at_p[0].dx);
    CHECK(at_q[0].dy == at_p[0].dy);
    CHECK(at_q[1].dy == at_p[1].dy);
}

TEST_CASE("Killing property via finite-difference Lie derivative") {
    std::mt19937_64 rng(45);
    const double h = 1e-5;
    for (int k = 0; k < 100; ++k) {
        const Point p = random_point(rng);
        const CoordVector u = random_vec(rng, 1.0), v = random_vec(rng, 1.0);
        const FrameVector fu = coord_to_frame(p, u);
        const FrameVector fv = coord_to_frame(p, v);
        for (int field = 0; field < 3; ++field) {
            const auto K_frame = [field](const Point& q) {
                return coord_to_frame(q, killing_fields(q)[field]);
            };
            const auto nabla_K = [&](const CoordVector& dir, const FrameVector& fdir) {
                const Point qp{p.x + h * dir.dx, p.y + h * dir.dy, p.z + h * dir.dz};
                const Point qm{p.x - h * dir.dx, p.y - h * dir.dy, p.z - h * dir.dz};
                const FrameVector dK = (1.0 / (2.0 * h)) * (K_frame(qp) - K_frame(qm));
                return ambient_covariant_derivative(fdir, K_frame(p), dK);
            };
            const double lie = dot(nabla_K(u, fu), fv) + dot(fu, nabla_K(v, fv));
            CHECK(std::abs(lie) < 1e-6);
        }
    }
}
