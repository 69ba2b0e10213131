#include "gst/attractor.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

namespace gst {

namespace {

void check_depth(int depth, int depth_cap) {
    if (depth < 0) throw DepthCap("depth must be non-negative");
    if (depth > depth_cap) {
        throw DepthCap("depth " + std::to_string(depth) + " exceeds cap " +
                       std::to_string(depth_cap));
    }
}

void enumerate_words(const SierpinskiIFS& ifs, const AffineMap2& prefix, int remaining,
                     TriangleCover& cover) {
    if (remaining == 0) {
        const std::array<Point2, 3> v = ifs.vertices();
        cover.transforms.push_back(prefix);
        cover.triangles.push_back({apply(prefix, v[0]), apply(prefix, v[1]), apply(prefix, v[2])});
        return;
    }
    for (int letter = 0; letter < 3; ++letter) {
        enumerate_words(ifs, compose(prefix, ifs.maps[letter]), remaining - 1, cover);
    }
}

} // namespace

TriangleCover deterministic_cover(const SierpinskiIFS& ifs, int depth, int depth_cap) {
    check_depth(depth, depth_cap);
    TriangleCover cover;
    cover.depth = depth;
    const std::size_t count = static_cast<std::size_t>(std::pow(3.0, depth) + 0.5);
    cover.triangles.reserve(count);
    cover.transforms.reserve(count);
    enumerate_words(ifs, AffineMap2::identity(), depth, cover);
    return cover;
}

PointCloud chaos_game(const SierpinskiIFS& ifs, std::size_t n, std::uint64_t seed, int burn_in,
                      bool uniform_selection) {
    PointCloud cloud;
    cloud.seed = seed;
    cloud.burn_in = burn_in;
    cloud.points.reserve(n);

    std::array<double, 3> weights;
    if (uniform_selection) {
        weights = {1.0, 1.0, 1.0};
    } else {
        const std::array<double, 3> r = ifs.ratios.as_array();
        weights = {r[0] * r[0], r[1] * r[1], r[2] * r[2]};
    }
    const double total = weights[0] + weights[1] + weights[2];
    const double cut0 = weights[0] / total;
    const double cut1 = (weights[0] + weights[1]) / total;

    // Map selection walks the cumulative weights with a [0,1) double drawn
    // from the top 53 bits, so the orbit is identical on every platform.
    std::mt19937_64 rng(seed);
    const auto next_uniform = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    Point2 x{0.0, 0.0};
    const std::size_t total_steps = n + static_cast<std::size_t>(std::max(burn_in, 0));
    for (std::size_t step = 0; step < total_steps; ++step) {
        const double u = next_uniform();
        const int pick = u < cut0 ? 0 : (u < cut1 ? 1 : 2);
        x = apply(ifs.maps[pick], x);
        if (step >= static_cast<std::size_t>(std::max(burn_in, 0))) {
            cloud.points.push_back(x);
        }
    }
    return cloud;
}

namespace {

// Directed max-min distance with early exit once a candidate minimum drops
// below the current outer maximum.
double directed_hausdorff(std::span<const Point2> xs, std::span<const Point2> ys) {
    double worst2 = 0.0;
    for (const Point2& x : xs) {
        double best2 = std::numeric_limits<double>::infinity();
        for (const Point2& y : ys) {
            const double dx = x.x - y.x;
            const double dy = x.y - y.y;
            const double d2 = dx * dx + dy * dy;
            if (d2 < best2) {
                best2 = d2;
                if (best2 <= worst2) break;
            }
        }
        if (best2 > worst2) worst2 = best2;
    }
    return std::sqrt(worst2);
}

} // namespace

double hausdorff_distance(std::span<const Point2> xs, std::span<const Point2> ys) {
    if (xs.empty() || ys.empty()) {
        throw EmptySet("Hausdorff distance needs two non-empty sets");
    }
    return std::max(directed_hausdorff(xs, ys), directed_hausdorff(ys, xs));
}

std::vector<double> convergence_probe(const SierpinskiIFS& ifs, int k, int depth_cap) {
    check_depth(k, depth_cap);
    std::vector<double> gaps;
    gaps.reserve(static_cast<std::size_t>(k));
    const std::array<Point2, 3> verts = ifs.vertices();
    std::vector<Point2> previous(verts.begin(), verts.end());
    for (int j = 1; j <= k; ++j) {
        std::vector<Point2> current;
        current.reserve(previous.size() * 3);
        for (const AffineMap2& f : ifs.maps) {
            for (const Point2& p : previous) {
                current.push_back(apply(f, p));
            }
        }
        gaps.push_back(hausdorff_distance(previous, current));
        previous.swap(current);
    }
    return gaps;
}

Viewport hull_viewport(const SierpinskiIFS& ifs) {
    const std::array<Point2, 3> v = ifs.vertices();
    Viewport box;
    box.xmin = std::min({v[0].x, v[1].x, v[2].x});
    box.xmax = std::max({v[0].x, v[1].x, v[2].x});
    box.ymin = std::min({v[0].y, v[1].y, v[2].y});
    box.ymax = std::max({v[0].y, v[1].y, v[2].y});
    return box;
}

namespace {

Bitmap blank_bitmap(Viewport viewport, int width, int height) {
    if (width < 1 || height < 1) {
        throw BadViewport("bitmap dimensions must be at least 1x1");
    }
    if (!(viewport.xmax > viewport.xmin) || !(viewport.ymax > viewport.ymin)) {
        throw BadViewport("viewport must have positive area");
    }
    Bitmap bitmap;
    bitmap.width = width;
    bitmap.height = height;
    bitmap.viewport = viewport;
    bitmap.pixels.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
    return bitmap;
}

} // namespace

Bitmap rasterize(const TriangleCover& cover, Viewport viewport, int width, int height) {
    Bitmap bitmap = blank_bitmap(viewport, width, height);
    const double px = (viewport.xmax - viewport.xmin) / width;
    const double py = (viewport.ymax - viewport.ymin) / height;
    for (const Triangle& t : cover.triangles) {
        const double xmin = std::min({t[0].x, t[1].x, t[2].x});
        const double xmax = std::max({t[0].x, t[1].x, t[2].x});
        const double ymin = std::min({t[0].y, t[1].y, t[2].y});
        const double ymax = std::max({t[0].y, t[1].y, t[2].y});
        int c0 = static_cast<int>(std::floor((xmin - viewport.xmin) / px));
        int c1 = static_cast<int>(std::ceil((xmax - viewport.xmin) / px));
        int r0 = static_cast<int>(std::floor((viewport.ymax - ymax) / py));
        int r1 = static_cast<int>(std::ceil((viewport.ymax - ymin) / py));
        c0 = std::max(c0, 0);
        r0 = std::max(r0, 0);
        c1 = std::min(c1, width - 1);
        r1 = std::min(r1, height - 1);
        for (int r = r0; r <= r1; ++r) {
            const double y = viewport.ymax - (r + 0.5) * py;
            for (int c = c0; c <= c1; ++c) {
                const double x = viewport.xmin + (c + 0.5) * px;
                if (point_in_triangle({x, y}, t)) {
                    bitmap.pixels[static_cast<std::size_t>(r) * width + c] = 0xFF;
                }
            }
        }
    }
    return bitmap;
}

Bitmap rasterize(const PointCloud& cloud, Viewport viewport, int width, int height) {
    Bitmap bitmap = blank_bitmap(viewport, width, height);
    const double px = (viewport.xmax - viewport.xmin) / width;
    const double py = (viewport.ymax - viewport.ymin) / height;
    for (const Point2& p : cloud.points) {
        const int c = static_cast<int>(std::floor((p.x - viewport.xmin) / px));
        const int r = static_cast<int>(std::floor((viewport.ymax - p.y) / py));
        if (c < 0 || c >= width || r < 0 || r >= height) continue;
        bitmap.pixels[static_cast<std::size_t>(r) * width + c] = 0xFF;
    }
    return bitmap;
}

std::size_t count_set_pixels(const Bitmap& bitmap) {
    return static_cast<std::size_t>(
        std::count(bitmap.pixels.begin(), bitmap.pixels.end(), std::uint8_t{0xFF}));
}

std::string export_pgm(const Bitmap& bitmap) {
    char header[64];
    std::snprintf(header, sizeof(header), "P5\n%d %d\n255\n", bitmap.width, bitmap.height);
    std::string out(header);
    out.append(reinterpret_cast<const char*>(bitmap.pixels.data()), bitmap.pixels.size());
    return out;
}

Bitmap parse_pgm(std::string_view data) {
    // Accepts exactly the P5 layout export_pgm writes: whitespace-separated
    // header tokens, maxval 255, then raw bytes.
    std::size_t pos = 0;
    const auto next_token = [&]() -> std::string {
        while (pos < data.size() && std::isspace(static_cast<unsigned char>(data[pos]))) ++pos;
        const std::size_t start = pos;
        while (pos < data.size() && !std::isspace(static_cast<unsigned char>(data[pos]))) ++pos;
        return std::string(data.substr(start, pos - start));
    };
    if (next_token() != "P5") throw IOFailure("not a binary PGM (P5) stream");
    Bitmap bitmap;
    try {
        bitmap.width = std::stoi(next_token());
        bitmap.height = std::stoi(next_token());
        if (std::stoi(next_token()) != 255) throw IOFailure("expected maxval 255");
    } catch (const std::logic_error&) {
        throw IOFailure("malformed PGM header");
    }
    if (bitmap.width < 1 || bitmap.height < 1) throw IOFailure("non-positive PGM dimensions");
    ++pos; // single whitespace byte after maxval
    const std::size_t need =
        static_cast<std::size_t>(bitmap.width) * static_cast<std::size_t>(bitmap.height);
    if (data.size() - pos < need) throw IOFailure("truncated PGM payload");
    bitmap.pixels.assign(data.begin() + pos, data.begin() + pos + need);
    bitmap.viewport = Viewport{0.0, 0.0, static_cast<double>(bitmap.width),
                               static_cast<double>(bitmap.height)};
    return bitmap;
}

std::string export_svg(const TriangleCover& cover) {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (!cover.triangles.empty()) {
        xmin = xmax = cover.triangles[0][0].x;
        ymin = ymax = cover.triangles[0][0].y;
        for (const Triangle& t : cover.triangles) {
            for (const Point2& p : t) {
                xmin = std::min(xmin, p.x);
                xmax = std::max(xmax, p.x);
                ymin = std::min(ymin, p.y);
                ymax = std::max(ymax, p.y);
            }
        }
    }
    const double w = std::max(xmax - xmin, 1e-12);
    const double h = std::max(ymax - ymin, 1e-12);
    const double scale = 1000.0 / w;
    char buf[256];
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                  "viewBox=\"0 0 %.6f %.6f\">\n",
                  w * scale, h * scale);
    out += buf;
    for (const Triangle& t : cover.triangles) {
        std::snprintf(buf, sizeof(buf),
                      "<polygon points=\"%.6f,%.6f %.6f,%.6f %.6f,%.6f\" fill=\"#000000\"/>\n",
                      (t[0].x - xmin) * scale, (ymax - t[0].y) * scale, (t[1].x - xmin) * scale,
                      (ymax - t[1].y) * scale, (t[2].x - xmin) * scale, (ymax - t[2].y) * scale);
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

} // namespace gst
