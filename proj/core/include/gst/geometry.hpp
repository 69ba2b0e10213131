#pragma once

#include <cmath>
#include <string>

#include "gst/errors.hpp"
#include "gst/tolerances.hpp"

namespace gst {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
inline Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 p, Point2 q) { return norm(p - q); }

// Triangle with base AB fixed as the unit segment (0,0)-(1,0);
// a = |BC|, b = |AC|.
struct TriangleParams {
    double a = 1.0;
    double b = 1.0;
};

// Strict triangle inequality (equivalently, a strictly positive radicand in
// the apex formula).
bool is_valid(const TriangleParams& params);
void require_valid(const TriangleParams& params); // throws DegenerateTriangle

// Apex C = ((b^2 - a^2 + 1)/2, sqrt(4 b^2 - (b^2 - a^2 + 1)^2)/2).
Point2 vertex_c(const TriangleParams& params);

enum class TriangleKind { Acute, Right, Obtuse };

struct TriangleClass {
    TriangleKind kind = TriangleKind::Acute;
    bool degenerate = false;
};

const char* to_string(TriangleKind kind);

// Right iff one of a^2+b^2=1, a^2=b^2+1, b^2=a^2+1 within tol (compared on
// the squared lengths); obtuse beyond, acute inside.
TriangleClass classify(const TriangleParams& params, double tol = tol::classify);

// Family letters name the flip pattern of (f_A, f_B, f_C):
// N = orientation preserving scale+translation, F = reflecting similitude.
enum class Family { NNN, FNN, FFN, FFF };

const char* to_string(Family family);
Family parse_family(const std::string& text); // throws Unsupported

struct DomainCheck {
    bool accepted = false;
    std::string reason; // failed inequality when rejected
};

// NNN and FNN accept every valid triangle; FFN needs a^2+b^2 > 1 (gamma > 0);
// FFF needs a strictly acute triangle (all three ratios in (0,1)).
DomainCheck family_domain(Family family, const TriangleParams& params);
void require_family_domain(Family family, const TriangleParams& params);

} // namespace gst
