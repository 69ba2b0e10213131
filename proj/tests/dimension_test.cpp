#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gst/dimension.hpp"
#include "support/oracles.hpp"

using namespace gst;

namespace {

const double kSierpinskiDim = std::log(3.0) / std::log(2.0);

} // namespace

TEST_SUITE("dimension") {

TEST_CASE("Moran solver on the classical ratios") {
    CHECK(std::fabs(moran_dimension({0.5, 0.5, 0.5}) - kSierpinskiDim) <= 1e-10);
    // 0.64 + 0.36 = 1: the root sits exactly at 2.
    CHECK(moran_dimension({0.8, 0.6, 0.0}) == doctest::Approx(2.0).epsilon(1e-12));
    // Two half-scale maps tile a segment.
    CHECK(moran_dimension({0.5, 0.5, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Moran solver rejects invalid ratio sets") {
    CHECK_THROWS_AS(moran_dimension({0.5, 0.0, 0.0}), BracketFailure);
    CHECK_THROWS_AS(moran_dimension({1.0, 0.5, 0.5}), BracketFailure);
    CHECK_THROWS_AS(moran_dimension({0.9, 0.9, 0.9}), BracketFailure); // root above 4
}

TEST_CASE("Moran solver is permutation invariant") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ratio(0.05, 0.65);
    for (int i = 0; i < 200; ++i) {
        std::array<double, 3> rs{ratio(rng), ratio(rng), ratio(rng)};
        const double d = moran_dimension(rs);
        std::sort(rs.begin(), rs.end());
        do {
            CHECK(std::fabs(moran_dimension(rs) - d) <= 1e-10);
        } while (std::next_permutation(rs.begin(), rs.end()));
    }
}

TEST_CASE("Moran solver is monotone in the ratios") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> ratio(0.05, 0.6);
    std::uniform_real_distribution<double> bump(0.005, 0.05);
    for (int i = 0; i < 200; ++i) {
        const std::array<double, 3> rs{ratio(rng), ratio(rng), ratio(rng)};
        std::array<double, 3> grown = rs;
        grown[i % 3] += bump(rng);
        CHECK(moran_dimension(grown) > moran_dimension(rs));
    }
}

TEST_CASE("solver residual stays within tolerance") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ratio(0.05, 0.65);
    for (int i = 0; i < 200; ++i) {
        const std::array<double, 3> rs{ratio(rng), ratio(rng), ratio(rng)};
        const double d = moran_dimension(rs, 1e-12);
        const double residual =
            std::fabs(std::pow(rs[0], d) + std::pow(rs[1], d) + std::pow(rs[2], d) - 1.0);
        CHECK(residual <= 1e-12);
    }
}

TEST_CASE("dimension of family members") {
    CHECK(std::fabs(dimension_of(Family::NNN, {1.3, 0.9}).d - kSierpinskiDim) <= 1e-10);
    CHECK(std::fabs(dimension_of(Family::FNN, {1.0, 1.0}).d - kSierpinskiDim) <= 1e-10);
    CHECK(dimension_of(Family::FFN, {0.2, 1.1}).d == doctest::Approx(1.44).epsilon(0.01));
}

TEST_CASE("all four families collapse to the Sierpinski dimension when equilateral") {
    for (Family family : {Family::NNN, Family::FNN, Family::FFN, Family::FFF}) {
        const DimensionSample sample = dimension_of(family, {1.0, 1.0});
        CHECK(std::fabs(sample.d - kSierpinskiDim) <= 1e-10);
    }
}

TEST_CASE("FNN implicit derivative") {
    CHECK(std::fabs(fnn_implicit_derivative(1.0, kSierpinskiDim)) <= 1e-12);

    const auto solved = [](double b) {
        return dimension_of(Family::FNN, {std::max(1.0, b), b}, 1e-13).d;
    };
    for (double b : {0.8, 0.9, 1.2, 1.7}) {
        const double d = solved(b);
        const double formula = fnn_implicit_derivative(b, d);
        const double h = 1e-5;
        const double fd = (solved(b + h) - solved(b - h)) / (2.0 * h);
        CHECK(std::fabs(formula - fd) <= std::max(1e-6, 1e-4 * std::fabs(formula)));
    }
    // Slope changes sign across the minimum at b = 1.
    CHECK(fnn_implicit_derivative(0.8, solved(0.8)) < 0.0);
    CHECK(fnn_implicit_derivative(1.2, solved(1.2)) > 0.0);
}

TEST_CASE("1d scan basics") {
    const std::vector<ScanPoint> pts = scan_1d(Family::FNN, 0.9, 1.1, 3, std::nan(""));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].b == doctest::Approx(0.9));
    CHECK(pts[1].b == doctest::Approx(1.0));
    CHECK(pts[2].b == doctest::Approx(1.1));
    CHECK(pts[1].dimension < pts[0].dimension);
    CHECK(pts[1].dimension < pts[2].dimension);

    const std::vector<ScanPoint> single = scan_1d(Family::FNN, 0.9, 1.1, 1, 1.0);
    REQUIRE(single.size() == 1);
    CHECK(single[0].dimension ==
          doctest::Approx(dimension_of(Family::FNN, {1.0, 0.9}).d).epsilon(1e-14));

    // Fixed a = 1 makes b >= 2 degenerate: those grid points become gaps.
    const std::vector<ScanPoint> gappy = scan_1d(Family::FNN, 1.8, 2.2, 5, 1.0);
    CHECK(gappy[0].ok());
    CHECK_FALSE(gappy[4].ok());
    CHECK_FALSE(gappy[4].reason.empty());
}

TEST_CASE("FNN dimension attains its scan minimum at the grid point nearest b = 1") {
    const std::vector<ScanPoint> pts = scan_1d(Family::FNN, 0.3, 3.0, 201, std::nan(""));
    REQUIRE(pts.size() == 201);
    int best = -1;
    for (int i = 0; i < 201; ++i) {
        REQUIRE(pts[i].ok());
        if (best < 0 || pts[i].dimension < pts[best].dimension) best = i;
    }
    int nearest = 0;
    for (int i = 1; i < 201; ++i) {
        if (std::fabs(pts[i].b - 1.0) < std::fabs(pts[nearest].b - 1.0)) nearest = i;
    }
    CHECK(best == nearest);
}

TEST_CASE("2d scan symmetry and boundary behaviour for FFN") {
    const ScanGrid grid = scan_2d(Family::FFN, 0.8, 1.2, 0.8, 1.2, 9);
    REQUIRE(grid.points.size() == 81);
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
            const ScanPoint& pij = grid.points[static_cast<std::size_t>(i) * 9 + j];
            const ScanPoint& pji = grid.points[static_cast<std::size_t>(j) * 9 + i];
            REQUIRE(pij.ok());
            CHECK(std::fabs(pij.dimension - pji.dimension) <= 1e-9);
        }
    }

    // Approaching a^2 + b^2 = 1 from the acute side drives d towards 2.
    double previous = 0.0;
    for (double r2 : {1.05, 1.01, 1.001}) {
        const double side = std::sqrt(r2 / 2.0);
        const double d = dimension_of(Family::FFN, {side, side}).d;
        CHECK(d > previous);
        previous = d;
    }
    CHECK(previous > 1.99);

    // Obtuse FFN parameters below the Sierpinski dimension exist.
    CHECK(classify({0.2, 1.1}).kind == TriangleKind::Obtuse);
    CHECK(dimension_of(Family::FFN, {0.2, 1.1}).d < kSierpinskiDim);
}

TEST_CASE("CSV output carries gaps with reasons") {
    const std::vector<ScanPoint> pts = scan_1d(Family::FFN, 0.5, 0.9, 3, 0.5);
    std::ostringstream csv;
    write_csv(csv, pts);
    const std::string text = csv.str();
    CHECK(text.rfind("a,b,dimension,residual\n", 0) == 0);
    CHECK(text.find("nan,nan,") != std::string::npos);
}

TEST_CASE("critical point reports") {
    const CriticalPointReport ffn = critical_point_check(Family::FFN, 1.0, 1.0);
    CHECK(std::hypot(ffn.gradient[0], ffn.gradient[1]) < 1e-6);
    CHECK(ffn.hessian_eigs[0] < -1e-4);
    CHECK(ffn.hessian_eigs[1] > 1e-4);
    CHECK(ffn.classification == CriticalKind::Saddle);

    const CriticalPointReport fff = critical_point_check(Family::FFF, 1.0, 1.0);
    CHECK(std::hypot(fff.gradient[0], fff.gradient[1]) < 1e-6);
    CHECK(fff.classification == CriticalKind::Min);

    const CriticalPointReport fnn = critical_point_check(Family::FNN, 1.0, 1.0);
    CHECK(std::fabs(fnn.gradient[1]) < 1e-6);

    // a = b = 0.7075 sits 6e-4 from the a^2+b^2 = 1 boundary, inside the
    // 1e-3 Hessian stencil reach.
    CHECK_THROWS_AS(critical_point_check(Family::FFF, 0.7075, 0.7075), DomainEdge);
}

} // TEST_SUITE
