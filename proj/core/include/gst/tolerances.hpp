#pragma once

// Central numeric tolerances. Construction identities are held to 1e-12,
// similitude structure to 1e-10; everything downstream references these
// instead of scattering magic numbers.

namespace gst::tol {

inline constexpr double construction = 1e-12; // fixed points, overlap identities
inline constexpr double similitude = 1e-10;   // |L^T L - s^2 I| entrywise
inline constexpr double classify = 1e-9;      // squared-side-length comparisons
inline constexpr double segment = 1e-10;      // overlap points on triangle sides
inline constexpr double osc_area = 1e-12;     // pairwise image intersection area
inline constexpr double solver = 1e-12;       // Moran equation residual
inline constexpr double tile_overlap = 1e-10; // relative tile intersection area
inline constexpr double algebraic = 1e-9;     // ratio-as-power-of-s matching
inline constexpr double fd_step = 1e-5;       // central difference step

} // namespace gst::tol
