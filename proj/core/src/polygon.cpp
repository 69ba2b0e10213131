#include "gst/polygon.hpp"

#include <algorithm>
#include <cmath>

namespace gst {

double polygon_area(const std::vector<Point2>& poly) {
    if (poly.size() < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % poly.size()];
        twice += cross(p, q);
    }
    return 0.5 * std::fabs(twice);
}

double triangle_area(const Triangle& t) {
    return 0.5 * std::fabs(cross(t[1] - t[0], t[2] - t[0]));
}

namespace {

double signed_area2(const std::vector<Point2>& poly) {
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        twice += cross(poly[i], poly[(i + 1) % poly.size()]);
    }
    return twice;
}

} // namespace

std::vector<Point2> clip_convex(const std::vector<Point2>& subject,
                                const std::vector<Point2>& clip) {
    if (subject.size() < 3 || clip.size() < 3) return {};
    std::vector<Point2> clipper = clip;
    if (signed_area2(clipper) < 0.0) {
        std::reverse(clipper.begin(), clipper.end());
    }
    std::vector<Point2> output = subject;
    for (std::size_t e = 0; e < clipper.size() && !output.empty(); ++e) {
        const Point2 a = clipper[e];
        const Point2 b = clipper[(e + 1) % clipper.size()];
        const Point2 edge = b - a;
        std::vector<Point2> input;
        input.swap(output);
        for (std::size_t i = 0; i < input.size(); ++i) {
            const Point2 cur = input[i];
            const Point2 nxt = input[(i + 1) % input.size()];
            const double side_cur = cross(edge, cur - a);
            const double side_nxt = cross(edge, nxt - a);
            if (side_cur >= 0.0) {
                output.push_back(cur);
            }
            if ((side_cur > 0.0 && side_nxt < 0.0) || (side_cur < 0.0 && side_nxt > 0.0)) {
                const double t = side_cur / (side_cur - side_nxt);
                output.push_back(cur + t * (nxt - cur));
            }
        }
    }
    return output;
}

double intersection_area(const Triangle& t, const Triangle& u) {
    const std::vector<Point2> subject(t.begin(), t.end());
    const std::vector<Point2> clip(u.begin(), u.end());
    return polygon_area(clip_convex(subject, clip));
}

bool point_in_triangle(Point2 p, const Triangle& t, double tol) {
    const double d1 = cross(t[1] - t[0], p - t[0]);
    const double d2 = cross(t[2] - t[1], p - t[1]);
    const double d3 = cross(t[0] - t[2], p - t[2]);
    const bool has_neg = d1 < -tol || d2 < -tol || d3 < -tol;
    const bool has_pos = d1 > tol || d2 > tol || d3 > tol;
    return !(has_neg && has_pos);
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + t * ab);
}

double point_triangle_distance(Point2 p, const Triangle& t) {
    if (point_in_triangle(p, t, 0.0)) return 0.0;
    return std::min({point_segment_distance(p, t[0], t[1]),
                     point_segment_distance(p, t[1], t[2]),
                     point_segment_distance(p, t[2], t[0])});
}

} // namespace gst
