#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "gst/ifs.hpp"
#include "gst/polygon.hpp"
#include "support/oracles.hpp"

using namespace gst;

namespace {

const Family kFamilies[] = {Family::NNN, Family::FNN, Family::FFN, Family::FFF};

double map_distance(const AffineMap2& f, const AffineMap2& g) {
    return std::max({std::fabs(f.m11 - g.m11), std::fabs(f.m12 - g.m12),
                     std::fabs(f.m21 - g.m21), std::fabs(f.m22 - g.m22), std::fabs(f.tx - g.tx),
                     std::fabs(f.ty - g.ty)});
}

} // namespace

TEST_SUITE("ifs") {

TEST_CASE("scaling ratios per family") {
    const ScalingRatios nnn = scaling_ratios(Family::NNN, {1.3, 0.8});
    CHECK(nnn.alpha == 0.5);
    CHECK(nnn.beta == 0.5);
    CHECK(nnn.gamma == 0.5);

    // b = 0.9: (b, 1, b^2)/(b^2+1), then the side equations as oracle.
    const ScalingRatios fnn = scaling_ratios(Family::FNN, {1.1, 0.9});
    CHECK(fnn.alpha == doctest::Approx(0.497237569060773).epsilon(1e-12));
    CHECK(fnn.beta == doctest::Approx(0.552486187845304).epsilon(1e-12));
    CHECK(fnn.gamma == doctest::Approx(0.447513812154696).epsilon(1e-12));
    CHECK(std::fabs(fnn.alpha * 0.9 + fnn.beta - 1.0) <= 1e-15);
    CHECK(std::fabs(fnn.alpha + fnn.gamma * 0.9 - 0.9) <= 1e-15);
    CHECK(std::fabs(fnn.beta + fnn.gamma - 1.0) <= 1e-15);

    const ScalingRatios fff = scaling_ratios(Family::FFF, {1.0, 1.0});
    CHECK(fff.alpha == 0.5);
    CHECK(fff.beta == 0.5);
    CHECK(fff.gamma == 0.5);

    CHECK_THROWS_AS(scaling_ratios(Family::FFF, {1.4, 2.0}), FamilyDomainViolation);
}

TEST_CASE("affine map primitives") {
    const AffineMap2 id = AffineMap2::identity();
    const Point2 p{0.3, 0.7};
    CHECK(distance(apply(id, p), p) == 0.0);

    const AffineMap2 half = AffineMap2::scaling(0.5);
    CHECK(distance(apply(half, {1.0, 0.0}), {0.5, 0.0}) == 0.0);

    CHECK(map_distance(compose(id, half), half) == 0.0);
    CHECK(map_distance(compose(half, invert(half)), id) <= 1e-12);
    CHECK(map_distance(invert(half), AffineMap2::scaling(2.0)) <= 1e-12);

    const AffineMap2 quarter = compose(half, half);
    CHECK(similitude_info(quarter).scale == doctest::Approx(0.25).epsilon(1e-15));

    CHECK_THROWS_AS(invert(AffineMap2{0, 0, 0, 0, 1, 1}), SingularMap);
}

TEST_CASE("compose agrees with sequential application") {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        const AffineMap2 f{coef(rng), coef(rng), coef(rng), coef(rng), coef(rng), coef(rng)};
        const AffineMap2 g{coef(rng), coef(rng), coef(rng), coef(rng), coef(rng), coef(rng)};
        const Point2 p{coef(rng), coef(rng)};
        CHECK(distance(apply(compose(f, g), p), apply(f, apply(g, p))) <= 1e-12);
    }
}

TEST_CASE("NNN maps match the classical construction") {
    const SierpinskiIFS ifs = build_ifs(Family::NNN, {1.1, 0.9});
    // f_B sends the origin to (alpha, 0) = (1/2, 0).
    CHECK(distance(apply(ifs.maps[1], {0.0, 0.0}), {0.5, 0.0}) <= 1e-15);

    const SierpinskiIFS eq = build_ifs(Family::NNN, {1.0, 1.0});
    CHECK(distance(apply(eq.maps[2], {0.0, 0.0}), {0.25, std::sqrt(3.0) / 4.0}) <= 1e-15);
}

TEST_CASE("FNN flip map sends B onto side AC") {
    const SierpinskiIFS ifs = build_ifs(Family::FNN, {1.1, 0.9});
    const double f = ifs.ratios.alpha / ifs.params.b;
    CHECK(distance(apply(ifs.maps[0], {1.0, 0.0}), {f * ifs.apex.x, f * ifs.apex.y}) <= 1e-15);
    // A flip composed with itself is a pure scaling by alpha^2.
    const AffineMap2 twice = compose(ifs.maps[0], ifs.maps[0]);
    const double a2 = ifs.ratios.alpha * ifs.ratios.alpha;
    CHECK(map_distance(twice, AffineMap2::scaling(a2)) <= 1e-12);
}

TEST_CASE("FFF algebraic parameters give ratios (1/sqrt3, 1/sqrt3, 1/3)") {
    const double side = std::sqrt(3.0) / 2.0;
    const SierpinskiIFS ifs = build_ifs(Family::FFF, {side, side});
    CHECK(ifs.ratios.alpha == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(ifs.ratios.beta == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(ifs.ratios.gamma == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(std::fabs(ifs.ratios.gamma - ifs.ratios.alpha * ifs.ratios.alpha) <= 1e-12);
}

TEST_CASE("overlap points of the equilateral NNN triangle are the midpoints") {
    const SierpinskiIFS ifs = build_ifs(Family::NNN, {1.0, 1.0});
    const OverlapPoints pts = overlap_points(ifs);
    CHECK(distance(pts.m, {0.25, std::sqrt(3.0) / 4.0}) <= 1e-15);
    CHECK(distance(pts.n, {0.5, 0.0}) <= 1e-15);
    CHECK(distance(pts.o, {0.75, std::sqrt(3.0) / 4.0}) <= 1e-15);
}

TEST_CASE("FNN overlap point N lands at (alpha b, 0)") {
    const SierpinskiIFS ifs = build_ifs(Family::FNN, {1.1, 0.9});
    const OverlapPoints pts = overlap_points(ifs);
    CHECK(distance(pts.n, {ifs.ratios.alpha * 0.9, 0.0}) <= 1e-14);
    CHECK(pts.n.x == doctest::Approx(0.447513812154696).epsilon(1e-12));
}

TEST_CASE("construction identities hold across random parameters") {
    std::mt19937_64 rng(2024);
    for (Family family : kFamilies) {
        const std::array<bool, 3> flips = flip_pattern(family);
        for (int trial = 0; trial < 300; ++trial) {
            const TriangleParams params = test::random_params(family, rng);
            const SierpinskiIFS ifs = build_ifs(family, params);
            const std::array<Point2, 3> verts = ifs.vertices();
            const std::array<double, 3> ratios = ifs.ratios.as_array();
            for (int i = 0; i < 3; ++i) {
                const SimilitudeInfo sim = similitude_info(ifs.maps[i]);
                CHECK(sim.deviation <= 1e-10);
                CHECK(sim.flip == flips[i]);
                CHECK(std::fabs(sim.scale - ratios[i]) <= 1e-10);
                CHECK(distance(apply(ifs.maps[i], verts[i]), verts[i]) <= 1e-12);
            }
            CHECK_NOTHROW(overlap_points(ifs));
        }
    }
}

TEST_CASE("interior angles are preserved by every constructed map") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> coord(-1.0, 2.0);
    for (Family family : kFamilies) {
        for (int trial = 0; trial < 50; ++trial) {
            const SierpinskiIFS ifs = build_ifs(family, test::random_params(family, rng));
            Triangle t{Point2{coord(rng), coord(rng)}, Point2{coord(rng), coord(rng)},
                       Point2{coord(rng), coord(rng)}};
            if (triangle_area(t) < 1e-3) continue;
            const std::array<double, 3> before = test::interior_angles(t);
            for (const AffineMap2& f : ifs.maps) {
                const Triangle image{apply(f, t[0]), apply(f, t[1]), apply(f, t[2])};
                const std::array<double, 3> after = test::interior_angles(image);
                for (int i = 0; i < 3; ++i) {
                    CHECK(std::fabs(after[i] - before[i]) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("open set condition witness") {
    CHECK(osc_witness(build_ifs(Family::NNN, {1.0, 1.0})).pass);
    CHECK(osc_witness(build_ifs(Family::FFN, {1.1, 0.9})).pass);
    CHECK(osc_witness(build_ifs(Family::FNN, {1.4, 2.0})).pass);

    // Duplicating f_A makes two images coincide: the witness must fail.
    SierpinskiIFS broken = build_ifs(Family::NNN, {1.0, 1.0});
    broken.maps[1] = broken.maps[0];
    const OscReport report = osc_witness(broken);
    CHECK_FALSE(report.pass);
    CHECK(report.pair_area[0] > 1e-3);
}

TEST_CASE("serialization matches the golden file") {
    const SierpinskiIFS ifs = build_ifs(Family::FNN, {1.1, 0.9});
    const std::string text = to_text(ifs);
    std::ifstream golden(std::string(GST_TEST_DATA_DIR) + "/fnn_1.1_0.9.txt",
                         std::ios::binary);
    REQUIRE(golden.good());
    std::stringstream buffer;
    buffer << golden.rdbuf();
    CHECK(text == buffer.str());
}

} // TEST_SUITE
