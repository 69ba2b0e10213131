#include "gst/ifs.hpp"

#include <cmath>
#include <cstdio>

#include "gst/polygon.hpp"

namespace gst {

ScalingRatios scaling_ratios(Family family, const TriangleParams& params) {
    require_family_domain(family, params);
    const double a = params.a;
    const double b = params.b;
    switch (family) {
    case Family::NNN:
        return {0.5, 0.5, 0.5};
    case Family::FNN: {
        const double q = b * b + 1.0;
        return {b / q, 1.0 / q, b * b / q};
    }
    case Family::FFN: {
        const double q = a * a + b * b;
        return {b / q, a / q, (q - 1.0) / q};
    }
    case Family::FFF:
        return {(b * b - a * a + 1.0) / (2.0 * b),
                (a * a - b * b + 1.0) / (2.0 * a),
                (a * a + b * b - 1.0) / (2.0 * a * b)};
    }
    throw Unsupported("unknown family");
}

std::array<bool, 3> flip_pattern(Family family) {
    switch (family) {
    case Family::NNN: return {false, false, false};
    case Family::FNN: return {true, false, false};
    case Family::FFN: return {true, true, false};
    case Family::FFF: return {true, true, true};
    }
    throw Unsupported("unknown family");
}

namespace {

// Reflecting similitudes all share the matrix shape [[q, p], [p, -q]].
AffineMap2 flip_map(double q, double p, double tx, double ty) {
    return {q, p, p, -q, tx, ty};
}

void check(bool ok, const char* what, double residual) {
    if (!ok) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s (residual %.3e)", what, residual);
        throw ConsistencyFailure(buf);
    }
}

void verify_construction(const SierpinskiIFS& ifs) {
    const std::array<Point2, 3> fixed = ifs.vertices();
    const std::array<double, 3> ratios = ifs.ratios.as_array();
    const std::array<bool, 3> flips = flip_pattern(ifs.family);
    for (int i = 0; i < 3; ++i) {
        const double fp = distance(apply(ifs.maps[i], fixed[i]), fixed[i]);
        check(fp <= tol::construction, "map does not fix its vertex", fp);
        const SimilitudeInfo sim = similitude_info(ifs.maps[i]);
        check(sim.deviation <= tol::similitude, "map is not a similitude", sim.deviation);
        check(std::fabs(sim.scale - ratios[i]) <= tol::similitude,
              "similitude scale disagrees with ratio", std::fabs(sim.scale - ratios[i]));
        check(sim.flip == flips[i], "flip pattern mismatch", sim.flip ? 1.0 : 0.0);
        check(ratios[i] > 0.0 && ratios[i] < 1.0, "ratio outside (0,1)", ratios[i]);
    }
}

} // namespace

SierpinskiIFS build_ifs(Family family, const TriangleParams& params) {
    SierpinskiIFS ifs;
    ifs.family = family;
    ifs.params = params;
    ifs.ratios = scaling_ratios(family, params); // validates the domain
    ifs.apex = vertex_c(params);

    const double a = params.a;
    const double b = params.b;
    const double cx = ifs.apex.x;
    const double cy = ifs.apex.y;
    const double alpha = ifs.ratios.alpha;
    const double beta = ifs.ratios.beta;
    const double gamma = ifs.ratios.gamma;
    const std::array<bool, 3> flips = flip_pattern(family);

    // f_A fixes the origin; a flip maps B onto side AC.
    if (flips[0]) {
        ifs.maps[0] = flip_map(alpha / b * cx, alpha / b * cy, 0.0, 0.0);
    } else {
        ifs.maps[0] = AffineMap2::scaling(alpha);
    }

    // f_B fixes B=(1,0); a flip maps A onto side BC.
    if (flips[1]) {
        const double q = beta / a * (1.0 - cx);
        const double p = -beta / a * cy;
        ifs.maps[1] = flip_map(q, p, 1.0 - beta / a * (1.0 - cx), beta / a * cy);
    } else {
        ifs.maps[1] = AffineMap2::scaling(beta);
        ifs.maps[1].tx = 1.0 - beta;
    }

    // f_C fixes the apex.
    if (flips[2]) {
        const double u = alpha / b - beta / a;
        const double v = beta / a - 1.0;
        ifs.maps[2] = flip_map(u * cx + v, u * cy, 1.0 - beta / a * (1.0 - cx), beta / a * cy);
    } else {
        ifs.maps[2] = AffineMap2::scaling(gamma);
        ifs.maps[2].tx = (1.0 - gamma) * cx;
        ifs.maps[2].ty = (1.0 - gamma) * cy;
    }

    verify_construction(ifs);
    overlap_points(ifs); // throws on any identity violation
    return ifs;
}

namespace {

struct OverlapRoute {
    int map_one;
    int vertex_one;
    int map_two;
    int vertex_two;
};

// For each family, the two routes that must land on each touching point
// (M, N, O in order), read off the vertex-image tables.
std::array<OverlapRoute, 3> overlap_routes(Family family) {
    switch (family) {
    case Family::NNN:
        return {{{0, 2, 2, 0}, {0, 1, 1, 0}, {1, 2, 2, 1}}};
    case Family::FNN:
        return {{{0, 1, 2, 0}, {0, 2, 1, 0}, {1, 2, 2, 1}}};
    case Family::FFN:
        return {{{0, 1, 2, 0}, {0, 2, 1, 2}, {1, 0, 2, 1}}};
    case Family::FFF:
        return {{{0, 1, 2, 1}, {0, 2, 1, 2}, {1, 0, 2, 0}}};
    }
    throw Unsupported("unknown family");
}

void require_on_segment(Point2 p, Point2 a, Point2 b, const char* side) {
    const double d = point_segment_distance(p, a, b);
    if (d > tol::segment) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "overlap point off side %s by %.3e", side, d);
        throw ConsistencyFailure(buf);
    }
}

} // namespace

OverlapPoints overlap_points(const SierpinskiIFS& ifs) {
    const std::array<Point2, 3> verts = ifs.vertices();
    const std::array<OverlapRoute, 3> routes = overlap_routes(ifs.family);
    std::array<Point2, 3> pts;
    static const char* names[3] = {"M", "N", "O"};
    for (int i = 0; i < 3; ++i) {
        const OverlapRoute& r = routes[i];
        const Point2 one = apply(ifs.maps[r.map_one], verts[r.vertex_one]);
        const Point2 two = apply(ifs.maps[r.map_two], verts[r.vertex_two]);
        const double gap = distance(one, two);
        if (gap > tol::construction) {
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "overlap identity for %s disagrees between maps %d and %d by %.3e",
                          names[i], r.map_one, r.map_two, gap);
            throw ConsistencyFailure(buf);
        }
        pts[i] = one;
    }
    OverlapPoints result{pts[0], pts[1], pts[2]};
    require_on_segment(result.m, verts[0], verts[2], "AC");
    require_on_segment(result.n, verts[0], verts[1], "AB");
    require_on_segment(result.o, verts[1], verts[2], "BC");
    return result;
}

OscReport osc_witness(const SierpinskiIFS& ifs) {
    OscReport report;
    report.pass = true;
    const std::array<Point2, 3> verts = ifs.vertices();
    const Triangle hull{verts[0], verts[1], verts[2]};

    std::array<Triangle, 3> images;
    for (int i = 0; i < 3; ++i) {
        images[i] = {apply(ifs.maps[i], verts[0]), apply(ifs.maps[i], verts[1]),
                     apply(ifs.maps[i], verts[2])};
        report.contained[i] = true;
        for (const Point2& p : images[i]) {
            if (!point_in_triangle(p, hull, 1e-9)) {
                report.contained[i] = false;
                report.pass = false;
                if (report.detail.empty()) {
                    char buf[128];
                    std::snprintf(buf, sizeof(buf),
                                  "image %d vertex (%.6g, %.6g) escapes the hull", i, p.x, p.y);
                    report.detail = buf;
                }
            }
        }
    }

    static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int k = 0; k < 3; ++k) {
        const double area = intersection_area(images[pairs[k][0]], images[pairs[k][1]]);
        report.pair_area[k] = area;
        if (area >= tol::osc_area) {
            report.pass = false;
            if (report.detail.empty()) {
                char buf[128];
                std::snprintf(buf, sizeof(buf), "images %d and %d overlap with area %.3e",
                              pairs[k][0], pairs[k][1], area);
                report.detail = buf;
            }
        }
    }
    return report;
}

std::string to_text(const SierpinskiIFS& ifs) {
    char buf[256];
    std::string out;
    out += "family ";
    out += to_string(ifs.family);
    out += '\n';
    std::snprintf(buf, sizeof(buf), "a %.17g\nb %.17g\n", ifs.params.a, ifs.params.b);
    out += buf;
    static const char* names[3] = {"fA", "fB", "fC"};
    for (int i = 0; i < 3; ++i) {
        const AffineMap2& f = ifs.maps[i];
        std::snprintf(buf, sizeof(buf), "%s %.17g %.17g %.17g %.17g %.17g %.17g\n", names[i],
                      f.m11, f.m12, f.m21, f.m22, f.tx, f.ty);
        out += buf;
    }
    return out;
}

} // namespace gst
