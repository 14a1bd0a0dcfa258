#include "ecg/kernel.hpp"

#include "ecg/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ecg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const size_t lo = static_cast<size_t>(pos);
  const size_t hi = std::min(lo + 1, v.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return v[lo] * (1.0 - frac) + v[hi] * frac;
}

struct WeightedMean {
  double value;
  double mass;
};

WeightedMean nw_point_1d(const std::vector<double>& xs,
                         const std::vector<double>& ys, double g, double h) {
  double num = 0, den = 0;
  const double inv = 1.0 / (2.0 * h * h);
  for (size_t i = 0; i < xs.size(); ++i) {
    const double d = g - xs[i];
    const double w = std::exp(-d * d * inv);
    num += w * ys[i];
    den += w;
  }
  return {den > 0 ? num / den : kNaN, den};
}

WeightedMean nw_point_2d(const std::vector<double>& x1s,
                         const std::vector<double>& x2s,
                         const std::vector<double>& ys, double g1, double g2,
                         double h1, double h2) {
  double num = 0, den = 0;
  const double inv1 = 1.0 / (2.0 * h1 * h1);
  const double inv2 = 1.0 / (2.0 * h2 * h2);
  for (size_t i = 0; i < x1s.size(); ++i) {
    const double d1 = g1 - x1s[i];
    const double d2 = g2 - x2s[i];
    const double w = std::exp(-(d1 * d1 * inv1 + d2 * d2 * inv2));
    num += w * ys[i];
    den += w;
  }
  return {den > 0 ? num / den : kNaN, den};
}

void check_sizes(size_t nx, size_t ny, double h) {
  if (nx == 0) throw std::runtime_error("kernel regression: empty data");
  if (nx != ny) throw std::runtime_error("kernel regression: length mismatch");
  if (!(h > 0)) throw std::invalid_argument("kernel regression: bandwidth must be > 0");
}

// Percentile band over pools of per-resample estimates; NaN entries mark
// resamples with zero mass at that grid point.
void finish_band(KernelEstimate& est,
                 const std::vector<std::vector<double>>& pools, double level) {
  const double lo_q = (1.0 - level) / 2.0;
  std::vector<double> ci_lo(pools.size(), kNaN), ci_hi(pools.size(), kNaN);
  for (size_t g = 0; g < pools.size(); ++g) {
    std::vector<double> pool;
    pool.reserve(pools[g].size());
    for (double v : pools[g]) {
      if (std::isnan(v)) ++est.dropped_resamples;
      else pool.push_back(v);
    }
    if (pool.empty()) continue;
    ci_lo[g] = quantile(pool, lo_q);
    ci_hi[g] = quantile(std::move(pool), 1.0 - lo_q);
  }
  est.ci_low = std::move(ci_lo);
  est.ci_high = std::move(ci_hi);
}

}  // namespace

std::vector<double> make_grid(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("make_grid: n must be >= 1");
  std::vector<double> grid(static_cast<size_t>(n));
  if (n == 1) {
    grid[0] = (lo + hi) / 2.0;
    return grid;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) grid[static_cast<size_t>(i)] = lo + step * i;
  return grid;
}

double bandwidth_default(const std::vector<double>& xs) {
  if (xs.size() < 2)
    throw std::runtime_error("bandwidth_default: need at least 2 values");

  const double n = static_cast<double>(xs.size());
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= n;
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1.0));

  std::vector<double> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  const double iqr = quantile(sorted, 0.75) - quantile(sorted, 0.25);

  const double spread = std::min(sd, iqr / 1.34);
  if (!(spread > 0))
    throw std::runtime_error("bandwidth_default: all values identical");
  return 1.06 * spread * std::pow(n, -0.2);
}

KernelEstimate nw_1d(const std::vector<double>& xs,
                     const std::vector<double>& ys,
                     const std::vector<double>& grid, double h) {
  check_sizes(xs.size(), ys.size(), h);
  KernelEstimate est;
  est.grid1 = grid;
  est.bandwidth1 = h;
  for (double g : grid) {
    const WeightedMean wm = nw_point_1d(xs, ys, g, h);
    est.estimate.push_back(wm.value);
    est.n_effective.push_back(wm.mass);
    est.supported.push_back(wm.mass >= kSupportFloor);
  }
  return est;
}

KernelEstimate nw_2d(const std::vector<double>& x1s,
                     const std::vector<double>& x2s,
                     const std::vector<double>& ys,
                     const std::vector<double>& grid1,
                     const std::vector<double>& grid2, double h1, double h2) {
  check_sizes(x1s.size(), ys.size(), h1);
  check_sizes(x2s.size(), ys.size(), h2);
  if (grid1.size() != grid2.size())
    throw std::runtime_error("nw_2d: grid coordinate lists must pair up");
  KernelEstimate est;
  est.grid1 = grid1;
  est.grid2 = grid2;
  est.bandwidth1 = h1;
  est.bandwidth2 = h2;
  for (size_t g = 0; g < grid1.size(); ++g) {
    const WeightedMean wm = nw_point_2d(x1s, x2s, ys, grid1[g], grid2[g], h1, h2);
    est.estimate.push_back(wm.value);
    est.n_effective.push_back(wm.mass);
    est.supported.push_back(wm.mass >= kSupportFloor);
  }
  return est;
}

KernelEstimate bootstrap_band_1d(const std::vector<double>& xs,
                                 const std::vector<double>& ys,
                                 const std::vector<double>& grid, double h,
                                 int B, double level, std::uint64_t seed) {
  if (B < 100) throw std::invalid_argument("bootstrap: B must be >= 100");
  if (!(level > 0 && level < 1))
    throw std::invalid_argument("bootstrap: level must be in (0,1)");

  KernelEstimate est = nw_1d(xs, ys, grid, h);
  const size_t n = xs.size();
  std::vector<std::vector<double>> pools(grid.size());

  std::vector<double> rx(n), ry(n);
  for (int b = 0; b < B; ++b) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(b));
    for (size_t i = 0; i < n; ++i) {
      const size_t j = rng.index(n);
      rx[i] = xs[j];
      ry[i] = ys[j];
    }
    for (size_t g = 0; g < grid.size(); ++g)
      pools[g].push_back(nw_point_1d(rx, ry, grid[g], h).value);
  }
  finish_band(est, pools, level);
  return est;
}

KernelEstimate bootstrap_band_2d(const std::vector<double>& x1s,
                                 const std::vector<double>& x2s,
                                 const std::vector<double>& ys,
                                 const std::vector<double>& grid1,
                                 const std::vector<double>& grid2, double h1,
                                 double h2, int B, double level,
                                 std::uint64_t seed) {
  if (B < 100) throw std::invalid_argument("bootstrap: B must be >= 100");
  if (!(level > 0 && level < 1))
    throw std::invalid_argument("bootstrap: level must be in (0,1)");

  KernelEstimate est = nw_2d(x1s, x2s, ys, grid1, grid2, h1, h2);
  const size_t n = ys.size();
  std::vector<std::vector<double>> pools(grid1.size());

  std::vector<double> r1(n), r2(n), ry(n);
  for (int b = 0; b < B; ++b) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(b));
    for (size_t i = 0; i < n; ++i) {
      const size_t j = rng.index(n);
      r1[i] = x1s[j];
      r2[i] = x2s[j];
      ry[i] = ys[j];
    }
    for (size_t g = 0; g < grid1.size(); ++g)
      pools[g].push_back(
          nw_point_2d(r1, r2, ry, grid1[g], grid2[g], h1, h2).value);
  }
  finish_band(est, pools, level);
  return est;
}

}  // namespace ecg
