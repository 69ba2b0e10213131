#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "gst/geometry.hpp"
#include "gst/ifs.hpp"

namespace gst {

// Unique positive root d of sum_i s_i^d = 1, by bisection on (0, 2] with a
// one-shot widening of the bracket to 4. Zero ratios contribute nothing and
// are skipped; at least two ratios must be positive and all below 1.
// Throws BracketFailure when no sign change exists on (0, 4].
double moran_dimension(const std::array<double, 3>& ratios_in, double tol = tol::solver);

struct DimensionSample {
    double a = 0.0;
    double b = 0.0;
    double d = 0.0;
    double residual = 0.0; // |sum s_i^d - 1| at the returned d
};

DimensionSample dimension_of(Family family, const TriangleParams& params,
                             double tol = tol::solver);

// Closed form of dd/db for the FNN family obtained by implicit
// differentiation of the Moran equation; d must be the dimension solved at b.
double fnn_implicit_derivative(double b, double d);

struct ScanPoint {
    double a = 0.0;
    double b = 0.0;
    double dimension = 0.0;
    double residual = 0.0;
    std::string reason; // non-empty marks a gap (point outside the domain)

    bool ok() const { return reason.empty(); }
};

// Inclusive grid sweep over b. Pass fixed_a = NaN to let each grid point pick
// the side a = max(1, b), which keeps every b > 0 inside all four family
// domains; out-of-domain points become gap records, never errors.
std::vector<ScanPoint> scan_1d(Family family, double b_min, double b_max, int steps,
                               double fixed_a, double tol = tol::solver);

struct ScanGrid {
    int a_steps = 0;
    int b_steps = 0;
    std::vector<ScanPoint> points; // row-major, a outer / b inner
};

ScanGrid scan_2d(Family family, double a_min, double a_max, double b_min, double b_max,
                 int steps, double tol = tol::solver);

// CSV with header a,b,dimension,residual; gap rows carry nan values plus a
// trailing reason column. 17 significant digits throughout.
void write_csv(std::ostream& out, const std::vector<ScanPoint>& points);

enum class CriticalKind { Min, Max, Saddle, Inconclusive };

const char* to_string(CriticalKind kind);

struct CriticalPointReport {
    double a = 0.0;
    double b = 0.0;
    std::array<double, 2> gradient{};     // (dd/da, dd/db), central differences
    std::array<double, 2> hessian_eigs{}; // ascending
    CriticalKind classification = CriticalKind::Inconclusive;
};

// Finite-difference gradient (step h) and Hessian (step max(h, 1e-3): second
// differences need a wider stencil than first ones to stay above solver
// noise). Eigenvalue signs are compared against a 1e-4 threshold. Throws
// DomainEdge when the stencil leaves the family domain.
CriticalPointReport critical_point_check(Family family, double a, double b,
                                         double h = tol::fd_step);

} // namespace gst
