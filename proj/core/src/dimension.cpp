#include "gst/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace gst {

namespace {

constexpr int kMaxBisectionIterations = 200;

double moran_objective(const std::array<double, 3>& ratios, double d) {
    double sum = -1.0;
    for (double s : ratios) {
        if (s > 0.0) sum += std::pow(s, d);
    }
    return sum;
}

} // namespace

double moran_dimension(const std::array<double, 3>& ratios_in, double tol) {
    int positive = 0;
    for (double s : ratios_in) {
        if (s < 0.0 || s >= 1.0 || !std::isfinite(s)) {
            throw BracketFailure("scaling ratios must lie in [0, 1)");
        }
        if (s > 0.0) ++positive;
    }
    if (positive < 2) {
        throw BracketFailure("need at least two positive scaling ratios");
    }

    // The objective is strictly decreasing in d, positive at d -> 0+.
    double lo = 0.0;
    double hi = 2.0;
    double g_hi = moran_objective(ratios_in, hi);
    if (std::fabs(g_hi) <= tol) return hi;
    if (g_hi > 0.0) {
        hi = 4.0; // planar OSC similitudes stay at d <= 2; this is safety only
        g_hi = moran_objective(ratios_in, hi);
        if (std::fabs(g_hi) <= tol) return hi;
        if (g_hi > 0.0) {
            throw BracketFailure("Moran objective has no root in (0, 4]");
        }
    }

    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < kMaxBisectionIterations; ++iter) {
        mid = 0.5 * (lo + hi);
        const double g = moran_objective(ratios_in, mid);
        if (std::fabs(g) <= tol) return mid;
        if (g > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return mid;
}

DimensionSample dimension_of(Family family, const TriangleParams& params, double tol) {
    const ScalingRatios ratios = scaling_ratios(family, params);
    DimensionSample sample;
    sample.a = params.a;
    sample.b = params.b;
    sample.d = moran_dimension(ratios.as_array(), tol);
    sample.residual = std::fabs(moran_objective(ratios.as_array(), sample.d));
    return sample;
}

double fnn_implicit_derivative(double b, double d) {
    const double q = b * b + 1.0;
    const double alpha = b / q;
    const double beta = 1.0 / q;
    const double gamma = b * b / q;
    const double ad = std::pow(alpha, d);
    const double bd = std::pow(beta, d);
    const double gd = std::pow(gamma, d);
    const double numerator = d * (-ad - 2.0 * gd + b * b * (2.0 * bd + ad));
    const double denominator =
        (b * b * b + b) * (bd * std::log(beta) + ad * std::log(alpha) + gd * std::log(gamma));
    return numerator / denominator;
}

namespace {

ScanPoint evaluate_point(Family family, double a, double b, double tol) {
    ScanPoint point;
    point.a = a;
    point.b = b;
    const TriangleParams params{a, b};
    const DomainCheck check = family_domain(family, params);
    if (!check.accepted) {
        point.dimension = std::numeric_limits<double>::quiet_NaN();
        point.residual = std::numeric_limits<double>::quiet_NaN();
        point.reason = check.reason;
        return point;
    }
    const DimensionSample sample = dimension_of(family, params, tol);
    point.dimension = sample.d;
    point.residual = sample.residual;
    return point;
}

double grid_value(double lo, double hi, int steps, int i) {
    if (steps <= 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

} // namespace

std::vector<ScanPoint> scan_1d(Family family, double b_min, double b_max, int steps,
                               double fixed_a, double tol) {
    std::vector<ScanPoint> points;
    points.reserve(static_cast<std::size_t>(std::max(steps, 0)));
    for (int i = 0; i < steps; ++i) {
        const double b = grid_value(b_min, b_max, steps, i);
        const double a = std::isnan(fixed_a) ? std::max(1.0, b) : fixed_a;
        points.push_back(evaluate_point(family, a, b, tol));
    }
    return points;
}

ScanGrid scan_2d(Family family, double a_min, double a_max, double b_min, double b_max,
                 int steps, double tol) {
    ScanGrid grid;
    grid.a_steps = steps;
    grid.b_steps = steps;
    grid.points.reserve(static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double a = grid_value(a_min, a_max, steps, i);
        for (int j = 0; j < steps; ++j) {
            const double b = grid_value(b_min, b_max, steps, j);
            grid.points.push_back(evaluate_point(family, a, b, tol));
        }
    }
    return grid;
}

void write_csv(std::ostream& out, const std::vector<ScanPoint>& points) {
    out << "a,b,dimension,residual\n";
    char buf[160];
    for (const ScanPoint& p : points) {
        if (p.ok()) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", p.a, p.b, p.dimension,
                          p.residual);
            out << buf;
        } else {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,nan,nan,", p.a, p.b);
            out << buf << p.reason << '\n';
        }
    }
}

const char* to_string(CriticalKind kind) {
    switch (kind) {
    case CriticalKind::Min: return "Min";
    case CriticalKind::Max: return "Max";
    case CriticalKind::Saddle: return "Saddle";
    case CriticalKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

CriticalPointReport critical_point_check(Family family, double a, double b, double h) {
    // Tighter residual than the default so second differences are not
    // dominated by solver noise.
    constexpr double solve_tol = 1e-13;
    const double hh = std::max(h, 1e-3);

    const auto inside = [&](double pa, double pb) {
        return family_domain(family, TriangleParams{pa, pb}).accepted;
    };
    const double reach = std::max(h, hh);
    const double stencil[5][2] = {
        {a - reach, b - reach}, {a - reach, b + reach}, {a + reach, b - reach},
        {a + reach, b + reach}, {a, b}};
    for (const auto& s : stencil) {
        if (!inside(s[0], s[1])) {
            throw DomainEdge("finite-difference stencil leaves the family domain");
        }
    }

    const auto dim = [&](double pa, double pb) {
        return dimension_of(family, TriangleParams{pa, pb}, solve_tol).d;
    };

    CriticalPointReport report;
    report.a = a;
    report.b = b;
    report.gradient[0] = (dim(a + h, b) - dim(a - h, b)) / (2.0 * h);
    report.gradient[1] = (dim(a, b + h) - dim(a, b - h)) / (2.0 * h);

    const double f0 = dim(a, b);
    const double faa = (dim(a + hh, b) - 2.0 * f0 + dim(a - hh, b)) / (hh * hh);
    const double fbb = (dim(a, b + hh) - 2.0 * f0 + dim(a, b - hh)) / (hh * hh);
    const double fab = (dim(a + hh, b + hh) - dim(a + hh, b - hh) - dim(a - hh, b + hh) +
                        dim(a - hh, b - hh)) /
                       (4.0 * hh * hh);

    const double mean = 0.5 * (faa + fbb);
    const double disc = std::sqrt(0.25 * (faa - fbb) * (faa - fbb) + fab * fab);
    report.hessian_eigs = {mean - disc, mean + disc};

    constexpr double eig_tol = 1e-4;
    const double lo = report.hessian_eigs[0];
    const double hi_eig = report.hessian_eigs[1];
    if (lo > eig_tol && hi_eig > eig_tol) {
        report.classification = CriticalKind::Min;
    } else if (lo < -eig_tol && hi_eig < -eig_tol) {
        report.classification = CriticalKind::Max;
    } else if (lo < -eig_tol && hi_eig > eig_tol) {
        report.classification = CriticalKind::Saddle;
    } else {
        report.classification = CriticalKind::Inconclusive;
    }
    return report;
}

} // namespace gst
