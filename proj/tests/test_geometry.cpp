#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "atiyah/geometry.hpp"
#include "oracles.hpp"

using atiyah::Complex;
using atiyah::Configuration;
using atiyah::PairFrame;
using atiyah::PlanarQuad;
using atiyah::Point;
using atiyah::QuadAngles;

namespace {

Configuration two_points(Point a, Point b) { return Configuration({a, b}); }

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("pair frame on the spec'd pairs") {
    {
        const PairFrame f = pair_frame(two_points({0, {0, 0}}, {0, {1, 0}}), 0, 1);
        CHECK(f.a == 0.0);
        CHECK(f.z == Complex(1, 0));
        CHECK(f.rho == doctest::Approx(1.0));
        CHECK(f.d == doctest::Approx(1.0));
        CHECK(f.e == doctest::Approx(1.0));
        CHECK(f.has_direction);
        CHECK(std::abs(f.u - Complex(1, 0)) < 1e-15);
    }
    {
        // Straight down: direction undefined, chart-B territory.
        const PairFrame f = pair_frame(two_points({0, {0, 0}}, {-1, {0, 0}}), 0, 1);
        CHECK(f.a == -1.0);
        CHECK(f.z == Complex(0, 0));
        CHECK(f.rho == doctest::Approx(1.0));
        CHECK(f.d == doctest::Approx(0.0));
        CHECK(f.e == doctest::Approx(2.0));
        CHECK_FALSE(f.has_direction);
    }
    {
        // 3-4-5 pair.
        const PairFrame f = pair_frame(two_points({0, {0, 0}}, {3, {0, 4}}), 0, 1);
        CHECK(f.rho == doctest::Approx(5.0));
        CHECK(f.d == doctest::Approx(8.0));
        CHECK(f.e == doctest::Approx(2.0));
    }
}

TEST_CASE("pair frame identities on random spatial configurations") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        const Configuration c = oracle::random_spatial_config(rng, 4);
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = 0; k < 4; ++k) {
                if (j == k) continue;
                const PairFrame f = pair_frame(c, j, k);
                const PairFrame g = pair_frame(c, k, j);
                CHECK(oracle::rel_err(f.d * f.e, std::norm(f.z)) < 1e-12);
                CHECK(oracle::rel_err(f.d + f.e, 2 * f.rho) < 1e-12);
                CHECK(g.a == -f.a);
                CHECK(g.z == -f.z);
                CHECK(g.d == f.e);
                CHECK(g.e == f.d);
            }
        }
    }
}

TEST_CASE("pair frame planar case collapses to r") {
    std::mt19937_64 rng(7);
    const Configuration c = oracle::planar_config(oracle::random_convex_quad(rng));
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = j + 1; k < 4; ++k) {
            const PairFrame f = pair_frame(c, j, k);
            const double r = std::abs(f.z);
            CHECK(f.d == doctest::Approx(r));
            CHECK(f.e == doctest::Approx(r));
            CHECK(f.rho == doctest::Approx(r));
        }
    }
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(Configuration({{0, {0, 0}}}), atiyah::InvalidSpecError);
    CHECK_THROWS_AS(Configuration({{0, {0, 0}}, {0, {0, 0}}, {0, {1, 0}}}),
                    atiyah::DegenerateError);
    CHECK_THROWS_AS(Configuration({{0, {0, 0}}, {std::nan(""), {1, 0}}}),
                    atiyah::InvalidSpecError);
    // Near-coincident relative to diameter.
    CHECK_THROWS_AS(Configuration({{0, {0, 0}}, {0, {1e-12, 0}}, {0, {1, 0}}}),
                    atiyah::DegenerateError);

    const Configuration planar({{0, {0, 0}}, {0, {1, 0}}, {0, {0, 1}}, {0, {1, 1}}});
    CHECK(planar.planar());
    const Configuration tilted({{0, {0, 0}}, {1, {1, 0}}, {0, {0, 1}}, {1, {1, 1}}});
    CHECK(tilted.planar());  // a plane through a tilted axis still counts
    const Configuration spatial({{0, {0, 0}}, {0, {1, 0}}, {0, {0, 1}}, {1, {1, 1}}});
    CHECK_FALSE(spatial.planar());
}

TEST_CASE("canonicalize shuffled unit square") {
    const PlanarQuad q = atiyah::canonicalize_quad(
        {Complex(1, 1), Complex(0, 0), Complex(1, 0), Complex(0, 1)});
    CHECK(atiyah::is_ccw_convex(q.z));
    CHECK(q.z[0] == Complex(1, 1));  // anchored at the first input point
    // Unit square sides and diagonals.
    CHECK(q.side_c == doctest::Approx(1.0));
    CHECK(q.side_b == doctest::Approx(std::sqrt(2.0)));
    CHECK(q.diameter == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("canonicalize rejects the dart with the reflex vertex") {
    try {
        atiyah::canonicalize_quad({Complex(0, 0), Complex(2, 0), Complex(1, 0.2), Complex(1, 2)});
        FAIL("expected NotConvexError");
    } catch (const atiyah::NotConvexError& e) {
        CHECK(e.vertex() == 2);
    }
}

TEST_CASE("canonicalize rejects a collinear triple") {
    CHECK_THROWS_AS(atiyah::canonicalize_quad(
                        {Complex(0, 0), Complex(1, 0), Complex(2, 0), Complex(0, 1)}),
                    atiyah::NotConvexError);
}

TEST_CASE("canonicalize accepts figure-one coordinates unchanged") {
    const std::array<Complex, 4> fig1{Complex(1, -1.32), Complex(-0.5, -2), Complex(1, -4),
                                      Complex(2.5, -2)};
    const PlanarQuad q = atiyah::canonicalize_quad(fig1);
    for (int i = 0; i < 4; ++i) CHECK(q.z[i] == fig1[i]);
}

TEST_CASE("canonicalize is idempotent") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<Complex, 4> pts = oracle::random_convex_quad(rng);
        std::shuffle(pts.begin(), pts.end(), rng);
        const PlanarQuad q1 = atiyah::canonicalize_quad(pts);
        const PlanarQuad q2 = atiyah::canonicalize_quad(q1.z);
        for (int i = 0; i < 4; ++i) CHECK(q1.z[i] == q2.z[i]);
    }
}

TEST_CASE("quad angles of the unit square") {
    const PlanarQuad q = atiyah::canonicalize_quad(
        {Complex(0, 1), Complex(0, 0), Complex(1, 0), Complex(1, 1)});
    const QuadAngles a = atiyah::quad_angles(q);
    for (int j = 0; j < 4; ++j) {
        CHECK(a.alpha[j] == doctest::Approx(kPi / 4).epsilon(1e-14));
        CHECK(a.beta[j] == doctest::Approx(kPi / 4).epsilon(1e-14));
        CHECK(a.gamma[j] == doctest::Approx(kPi / 2).epsilon(1e-14));
    }
}

TEST_CASE("quad angles of the 2 x 1 rectangle against elementary trig") {
    const PlanarQuad q = atiyah::canonicalize_quad(
        {Complex(0, 0), Complex(2, 0), Complex(2, 1), Complex(0, 1)});
    const QuadAngles a = atiyah::quad_angles(q);
    const double t = std::atan2(1.0, 2.0);
    CHECK(a.alpha[0] == doctest::Approx(t).epsilon(1e-14));
    CHECK(a.beta[0] == doctest::Approx(kPi / 2 - t).epsilon(1e-14));
    for (int j = 0; j < 4; ++j) {
        CHECK(a.gamma[j] == doctest::Approx(kPi / 2).epsilon(1e-14));
        CHECK(a.gamma[j] == a.alpha[j] + a.beta[j]);
    }
}

TEST_CASE("figure-one angles satisfy the four triangle sums") {
    const PlanarQuad q = atiyah::canonicalize_quad(
        {Complex(1, -1.32), Complex(-0.5, -2), Complex(1, -4), Complex(2.5, -2)});
    const QuadAngles a = atiyah::quad_angles(q);
    for (int j = 0; j < 4; ++j) {
        const double sum = a.alpha[(j + 1) % 4] + a.gamma[(j + 2) % 4] + a.beta[(j + 3) % 4];
        CHECK(std::abs(sum - kPi) < 1e-12);
    }
}

TEST_CASE("triangle sums over 1e5 random convex quads") {
    std::mt19937_64 rng(5150);
    double worst = 0.0;
    for (int trial = 0; trial < 100000; ++trial) {
        const PlanarQuad q = atiyah::canonicalize_quad(oracle::random_convex_quad(rng));
        const QuadAngles a = atiyah::quad_angles(q);
        double gamma_sum = 0.0;
        for (int j = 0; j < 4; ++j) {
            const double sum = a.alpha[(j + 1) % 4] + a.gamma[(j + 2) % 4] + a.beta[(j + 3) % 4];
            worst = std::max(worst, std::abs(sum - kPi));
            CHECK(a.alpha[j] > 0.0);
            CHECK(a.alpha[j] < kPi);
            CHECK(a.beta[j] > 0.0);
            CHECK(a.beta[j] < kPi);
            CHECK(a.gamma[j] < kPi);
            gamma_sum += a.gamma[j];
        }
        CHECK(std::abs(gamma_sum - 2 * kPi) < 1e-10);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("triangle area basics") {
    CHECK(atiyah::triangle_area(Complex(0, 0), Complex(1, 0), Complex(0, 1)) ==
          doctest::Approx(0.5));
    CHECK(atiyah::triangle_area(Complex(0, 0), Complex(1, 0), Complex(2, 0)) == 0.0);
    // Unit square halves.
    const Complex z1(0, 1), z2(0, 0), z3(1, 0), z4(1, 1);
    CHECK(atiyah::triangle_area(z1, z2, z3) == doctest::Approx(0.5));
    CHECK(atiyah::triangle_area(z1, z2, z4) == doctest::Approx(0.5));
    CHECK(atiyah::triangle_area(z1, z3, z4) == doctest::Approx(0.5));
    CHECK(atiyah::triangle_area(z2, z3, z4) == doctest::Approx(0.5));
}

TEST_CASE("triangle area argument rotation and quad additivity") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 1000; ++trial) {
        const Complex p(u(rng), u(rng)), q(u(rng), u(rng)), r(u(rng), u(rng));
        const double a = atiyah::triangle_area(p, q, r);
        CHECK(oracle::rel_err(a, atiyah::triangle_area(q, r, p)) < 1e-12);
        CHECK(oracle::rel_err(a, atiyah::triangle_area(r, p, q)) < 1e-12);

        const std::array<Complex, 4> z = oracle::random_convex_quad(rng);
        const double lhs = atiyah::triangle_area(z[0], z[1], z[2]) +
                           atiyah::triangle_area(z[0], z[2], z[3]);
        const double rhs = atiyah::triangle_area(z[0], z[1], z[3]) +
                           atiyah::triangle_area(z[1], z[2], z[3]);
        CHECK(oracle::rel_err(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("motions") {
    const Configuration square({{0, {0, 1}}, {0, {0, 0}}, {0, {1, 0}}, {0, {1, 1}}});

    SUBCASE("translation preserves pairwise distances") {
        const Configuration moved =
            apply_motion(square, atiyah::Translation{0.0, Complex(5, 7)});
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = j + 1; k < 4; ++k) {
                CHECK(oracle::rel_err(pair_frame(moved, j, k).rho,
                                      pair_frame(square, j, k).rho) < 1e-12);
            }
        }
    }

    SUBCASE("uniform scale doubles rho") {
        const Configuration scaled = apply_motion(square, atiyah::UniformScale{2.0});
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = j + 1; k < 4; ++k) {
                CHECK(oracle::rel_err(pair_frame(scaled, j, k).rho,
                                      2.0 * pair_frame(square, j, k).rho) < 1e-12);
            }
        }
        CHECK_THROWS_AS(apply_motion(square, atiyah::UniformScale{0.0}),
                        atiyah::InvalidSpecError);
        CHECK_THROWS_AS(apply_motion(square, atiyah::UniformScale{-1.0}),
                        atiyah::InvalidSpecError);
    }

    SUBCASE("reflection fixes a planar configuration") {
        const Configuration reflected = apply_motion(square, atiyah::Reflection{});
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(reflected[i].a == square[i].a);
            CHECK(reflected[i].z == square[i].z);
        }
    }

    SUBCASE("rotations are isometries") {
        std::mt19937_64 rng(77);
        std::normal_distribution<double> g;
        const Configuration c = oracle::random_spatial_config(rng, 4);
        for (int trial = 0; trial < 50; ++trial) {
            const atiyah::Rotation rot =
                atiyah::quaternion_rotation(g(rng), g(rng), g(rng), g(rng));
            const Configuration moved = apply_motion(c, rot);
            for (std::size_t j = 0; j < 4; ++j) {
                for (std::size_t k = j + 1; k < 4; ++k) {
                    CHECK(oracle::rel_err(pair_frame(moved, j, k).rho,
                                          pair_frame(c, j, k).rho) < 1e-12);
                }
            }
        }
    }

    SUBCASE("rotation about the preferred axis is planar rotation") {
        const atiyah::Rotation rot = atiyah::axis_angle_rotation(1, 0, 0, 0.7);
        const Configuration moved = apply_motion(square, rot);
        const Complex phase = std::polar(1.0, 0.7);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(moved[i].a == doctest::Approx(square[i].a));
            CHECK(std::abs(moved[i].z - phase * square[i].z) < 1e-14);
        }
    }
}
