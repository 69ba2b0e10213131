#include "gst/affine.hpp"

#include <cmath>

namespace gst {

AffineMap2 compose(const AffineMap2& outer, const AffineMap2& inner) {
    AffineMap2 r;
    r.m11 = outer.m11 * inner.m11 + outer.m12 * inner.m21;
    r.m12 = outer.m11 * inner.m12 + outer.m12 * inner.m22;
    r.m21 = outer.m21 * inner.m11 + outer.m22 * inner.m21;
    r.m22 = outer.m21 * inner.m12 + outer.m22 * inner.m22;
    const Point2 t = apply(outer, {inner.tx, inner.ty});
    r.tx = t.x;
    r.ty = t.y;
    return r;
}

AffineMap2 invert(const AffineMap2& f) {
    const double d = det(f);
    if (d == 0.0 || !std::isfinite(1.0 / d)) {
        throw SingularMap("affine map has zero determinant");
    }
    AffineMap2 r;
    r.m11 = f.m22 / d;
    r.m12 = -f.m12 / d;
    r.m21 = -f.m21 / d;
    r.m22 = f.m11 / d;
    r.tx = -(r.m11 * f.tx + r.m12 * f.ty);
    r.ty = -(r.m21 * f.tx + r.m22 * f.ty);
    return r;
}

SimilitudeInfo similitude_info(const AffineMap2& f) {
    // Columns of L.
    const double c11 = f.m11 * f.m11 + f.m21 * f.m21;
    const double c22 = f.m12 * f.m12 + f.m22 * f.m22;
    const double c12 = f.m11 * f.m12 + f.m21 * f.m22;
    const double s2 = 0.5 * (c11 + c22);
    SimilitudeInfo info;
    info.scale = std::sqrt(s2);
    info.deviation = std::max({std::fabs(c11 - s2), std::fabs(c22 - s2), std::fabs(c12)});
    info.flip = det(f) < 0.0;
    return info;
}

} // namespace gst
