#ifndef ECG_KERNEL_HPP
#define ECG_KERNEL_HPP

#include "ecg/types.hpp"

#include <cstdint>
#include <vector>

namespace ecg {

/// Grid points with a kernel mass below this are flagged unsupported.
inline constexpr double kSupportFloor = 5.0;

/// n equally spaced points spanning [lo, hi].
std::vector<double> make_grid(double lo, double hi, int n = 100);

/// Silverman's rule of thumb: 1.06 * min(sd, IQR/1.34) * n^(-1/5).
/// Throws when all values are identical.
double bandwidth_default(const std::vector<double>& xs);

/// Gaussian Nadaraya-Watson conditional mean on a 1D grid.
KernelEstimate nw_1d(const std::vector<double>& xs,
                     const std::vector<double>& ys,
                     const std::vector<double>& grid, double h);

/// Product-Gaussian-kernel conditional mean on paired 2D grid points.
KernelEstimate nw_2d(const std::vector<double>& x1s,
                     const std::vector<double>& x2s,
                     const std::vector<double>& ys,
                     const std::vector<double>& grid1,
                     const std::vector<double>& grid2, double h1, double h2);

/// Percentile bootstrap band around nw_1d: B pair resamples, each
/// re-estimated on the same grid and bandwidth. Deterministic given seed.
KernelEstimate bootstrap_band_1d(const std::vector<double>& xs,
                                 const std::vector<double>& ys,
                                 const std::vector<double>& grid, double h,
                                 int B, double level, std::uint64_t seed);

/// Same for the 2D estimator.
KernelEstimate bootstrap_band_2d(const std::vector<double>& x1s,
                                 const std::vector<double>& x2s,
                                 const std::vector<double>& ys,
                                 const std::vector<double>& grid1,
                                 const std::vector<double>& grid2, double h1,
                                 double h2, int B, double level,
                                 std::uint64_t seed);

}  // namespace ecg

#endif  // ECG_KERNEL_HPP
