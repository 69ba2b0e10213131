#pragma once

#include <array>
#include <string>

#include "gst/affine.hpp"
#include "gst/geometry.hpp"

namespace gst {

struct ScalingRatios {
    double alpha = 0.5; // f_A
    double beta = 0.5;  // f_B
    double gamma = 0.5; // f_C

    std::array<double, 3> as_array() const { return {alpha, beta, gamma}; }
};

// Per-family contraction ratios from the side equations:
//   NNN  (1/2, 1/2, 1/2)
//   FNN  (b, 1, b^2) / (b^2 + 1)
//   FFN  (b, a, a^2 + b^2 - 1) / (a^2 + b^2)
//   FFF  ((b^2 - a^2 + 1)/2b, (a^2 - b^2 + 1)/2a, (a^2 + b^2 - 1)/2ab)
ScalingRatios scaling_ratios(Family family, const TriangleParams& params);

// Which of (f_A, f_B, f_C) reflect, per family.
std::array<bool, 3> flip_pattern(Family family);

struct SierpinskiIFS {
    Family family = Family::NNN;
    TriangleParams params;
    ScalingRatios ratios;
    Point2 apex; // vertex C
    std::array<AffineMap2, 3> maps; // f_A, f_B, f_C

    std::array<Point2, 3> vertices() const { return {Point2{0.0, 0.0}, Point2{1.0, 0.0}, apex}; }
};

// Builds the three similitudes with fixed points A=(0,0), B=(1,0), C and
// verifies the construction identities (fixed points, similitude structure,
// flip pattern, ratio agreement, overlap consistency) before returning.
SierpinskiIFS build_ifs(Family family, const TriangleParams& params);

struct OverlapPoints {
    Point2 m; // on side AC
    Point2 n; // on side AB
    Point2 o; // on side BC
};

// The three just-touching points, each computed from two different maps;
// throws ConsistencyFailure if the two routes disagree or a point leaves
// its side.
OverlapPoints overlap_points(const SierpinskiIFS& ifs);

struct OscReport {
    bool pass = false;
    std::array<bool, 3> contained{};    // f_i(hull) inside the closed hull
    std::array<double, 3> pair_area{};  // |f_A.f_B|, |f_A.f_C|, |f_B.f_C| overlap
    std::string detail;                 // first failure witness, empty when pass
};

// Open set condition witness with the open hull interior as the candidate
// set: containment of the level-1 images plus pairwise interior
// disjointness (intersection area below tol::osc_area).
OscReport osc_witness(const SierpinskiIFS& ifs);

// Plain-text key-value serialisation (family, a, b, one line of six
// coefficients per map) with 17 significant digits.
std::string to_text(const SierpinskiIFS& ifs);

} // namespace gst
