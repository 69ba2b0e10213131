#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gst/ifs.hpp"
#include "gst/polygon.hpp"

namespace gst {

inline constexpr int kDefaultDepthCap = 12; // 3^12 ~ 531k triangles

// All 3^depth images of the hull under length-`depth` map compositions,
// words enumerated lexicographically over letters 1 -> f_A, 2 -> f_B,
// 3 -> f_C, transforms composed left to right.
struct TriangleCover {
    int depth = 0;
    std::vector<Triangle> triangles;
    std::vector<AffineMap2> transforms;
};

TriangleCover deterministic_cover(const SierpinskiIFS& ifs, int depth,
                                  int depth_cap = kDefaultDepthCap);

struct PointCloud {
    std::vector<Point2> points;
    std::uint64_t seed = 0;
    int burn_in = 0;
};

// Random orbit x <- f_i(x) from (0,0). Maps are selected with probability
// proportional to ratio^2 (area weighting) unless uniform_selection is set.
// RNG is mt19937_64; clouds are reproducible from the seed across builds.
PointCloud chaos_game(const SierpinskiIFS& ifs, std::size_t n, std::uint64_t seed,
                      int burn_in = 20, bool uniform_selection = false);

// Exact max-min metric over two finite point sets. Throws EmptySet.
double hausdorff_distance(std::span<const Point2> xs, std::span<const Point2> ys);

// Hausdorff distances between vertex sets of consecutive hull iterates
// F^(j-1) and F^j for j = 1..k; contraction makes the sequence decay
// geometrically at most at the largest scaling ratio.
std::vector<double> convergence_probe(const SierpinskiIFS& ifs, int k,
                                      int depth_cap = kDefaultDepthCap);

struct Viewport {
    double xmin = 0.0, ymin = 0.0, xmax = 1.0, ymax = 1.0;
};

// Bounding box of the hull triangle.
Viewport hull_viewport(const SierpinskiIFS& ifs);

// Row-major coverage grid, row 0 at the top of the viewport; pixels hold
// 0x00 (clear) or 0xFF (set).
struct Bitmap {
    int width = 0;
    int height = 0;
    Viewport viewport;
    std::vector<std::uint8_t> pixels;
};

Bitmap rasterize(const TriangleCover& cover, Viewport viewport, int width, int height);
Bitmap rasterize(const PointCloud& cloud, Viewport viewport, int width, int height);

std::size_t count_set_pixels(const Bitmap& bitmap);

// Binary PGM ("P5", maxval 255).
std::string export_pgm(const Bitmap& bitmap);
Bitmap parse_pgm(std::string_view data); // throws IOFailure

// One polygon element per cover triangle.
std::string export_svg(const TriangleCover& cover);

} // namespace gst
