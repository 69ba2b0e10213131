#pragma once

#include "gst/geometry.hpp"

namespace gst {

// Affine map x -> L x + t with L stored row-major. IFS constructors only ever
// produce similitudes, but the representation is a plain 6-tuple so structure
// can be verified instead of assumed.
struct AffineMap2 {
    double m11 = 1.0, m12 = 0.0;
    double m21 = 0.0, m22 = 1.0;
    double tx = 0.0, ty = 0.0;

    static AffineMap2 identity() { return {}; }
    static AffineMap2 scaling(double s) { return {s, 0.0, 0.0, s, 0.0, 0.0}; }
};

inline Point2 apply(const AffineMap2& f, Point2 p) {
    return {f.m11 * p.x + f.m12 * p.y + f.tx, f.m21 * p.x + f.m22 * p.y + f.ty};
}

// outer . inner: apply(compose(f, g), p) == apply(f, apply(g, p)).
AffineMap2 compose(const AffineMap2& outer, const AffineMap2& inner);

AffineMap2 invert(const AffineMap2& f); // throws SingularMap

inline double det(const AffineMap2& f) { return f.m11 * f.m22 - f.m12 * f.m21; }

struct SimilitudeInfo {
    double scale = 0.0;     // s with L^T L = s^2 I
    double deviation = 0.0; // worst entrywise departure of L^T L from s^2 I
    bool flip = false;      // det(L) < 0
};

SimilitudeInfo similitude_info(const AffineMap2& f);

} // namespace gst
