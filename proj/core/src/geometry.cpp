#include "gst/geometry.hpp"

namespace gst {

bool is_valid(const TriangleParams& params) {
    const double a = params.a;
    const double b = params.b;
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        return false;
    }
    return a + b > 1.0 && a + 1.0 > b && b + 1.0 > a;
}

void require_valid(const TriangleParams& params) {
    if (!is_valid(params)) {
        throw DegenerateTriangle("triangle inequality violated for a=" +
                                 std::to_string(params.a) + " b=" + std::to_string(params.b));
    }
}

Point2 vertex_c(const TriangleParams& params) {
    require_valid(params);
    const double b2 = params.b * params.b;
    const double a2 = params.a * params.a;
    const double cx2 = b2 - a2 + 1.0; // twice C_x
    const double radicand = 4.0 * b2 - cx2 * cx2;
    if (!(radicand > 0.0)) {
        throw DegenerateTriangle("apex radicand non-positive");
    }
    return {0.5 * cx2, 0.5 * std::sqrt(radicand)};
}

const char* to_string(TriangleKind kind) {
    switch (kind) {
    case TriangleKind::Acute: return "Acute";
    case TriangleKind::Right: return "Right";
    case TriangleKind::Obtuse: return "Obtuse";
    }
    return "?";
}

TriangleClass classify(const TriangleParams& params, double tol) {
    require_valid(params);
    const double a2 = params.a * params.a;
    const double b2 = params.b * params.b;
    // Squared-length excess of each angle's cosine numerator; negative means
    // the angle is obtuse.
    const double at_c = a2 + b2 - 1.0;
    const double at_a = b2 + 1.0 - a2;
    const double at_b = a2 + 1.0 - b2;
    const double least = std::min(at_c, std::min(at_a, at_b));
    TriangleClass cls;
    if (least < -tol) {
        cls.kind = TriangleKind::Obtuse;
    } else if (least <= tol) {
        cls.kind = TriangleKind::Right;
    } else {
        cls.kind = TriangleKind::Acute;
    }
    return cls;
}

const char* to_string(Family family) {
    switch (family) {
    case Family::NNN: return "NNN";
    case Family::FNN: return "FNN";
    case Family::FFN: return "FFN";
    case Family::FFF: return "FFF";
    }
    return "?";
}

Family parse_family(const std::string& text) {
    if (text == "NNN") return Family::NNN;
    if (text == "FNN") return Family::FNN;
    if (text == "FFN") return Family::FFN;
    if (text == "FFF") return Family::FFF;
    throw Unsupported("unknown family '" + text + "' (expected NNN, FNN, FFN or FFF)");
}

DomainCheck family_domain(Family family, const TriangleParams& params) {
    if (!is_valid(params)) {
        return {false, "triangle inequality violated"};
    }
    const double a2 = params.a * params.a;
    const double b2 = params.b * params.b;
    switch (family) {
    case Family::NNN:
    case Family::FNN:
        return {true, ""};
    case Family::FFN:
        if (!(a2 + b2 > 1.0)) {
            return {false, "a^2 + b^2 <= 1 makes gamma non-positive"};
        }
        return {true, ""};
    case Family::FFF:
        // All three ratios must stay in (0,1): strictly acute triangle.
        if (!(a2 + b2 > 1.0)) {
            return {false, "a^2 + b^2 <= 1 makes gamma non-positive"};
        }
        if (!(b2 + 1.0 > a2)) {
            return {false, "a^2 >= b^2 + 1 makes alpha non-positive"};
        }
        if (!(a2 + 1.0 > b2)) {
            return {false, "b^2 >= a^2 + 1 makes beta non-positive"};
        }
        return {true, ""};
    }
    return {false, "unknown family"};
}

void require_family_domain(Family family, const TriangleParams& params) {
    if (!is_valid(params)) {
        throw DegenerateTriangle("triangle inequality violated for a=" +
                                 std::to_string(params.a) + " b=" + std::to_string(params.b));
    }
    const DomainCheck check = family_domain(family, params);
    if (!check.accepted) {
        throw FamilyDomainViolation(std::string(to_string(family)) + " rejects a=" +
                                    std::to_string(params.a) + " b=" + std::to_string(params.b) +
                                    ": " + check.reason);
    }
}

} // namespace gst
