#pragma once

#include <array>
#include <vector>

#include "gst/geometry.hpp"

namespace gst {

using Triangle = std::array<Point2, 3>;

double polygon_area(const std::vector<Point2>& poly); // unsigned shoelace area

// Sutherland-Hodgman clip of a convex subject against a convex clip polygon.
// The clip polygon may be given in either winding; it is normalised inside.
std::vector<Point2> clip_convex(const std::vector<Point2>& subject,
                                const std::vector<Point2>& clip);

double intersection_area(const Triangle& t, const Triangle& u);

double triangle_area(const Triangle& t);

// Closed-triangle membership with an absolute slack on the barycentric
// cross products.
bool point_in_triangle(Point2 p, const Triangle& t, double tol = 1e-12);

double point_segment_distance(Point2 p, Point2 a, Point2 b);

// 0 inside, otherwise distance to the nearest edge.
double point_triangle_distance(Point2 p, const Triangle& t);

} // namespace gst
