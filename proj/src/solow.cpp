#include "ecg/solow.hpp"

#include <cmath>
#include <stdexcept>

namespace ecg {

double production(const SolowParams& p, double K) {
  if (K == 0) return 0;
  return p.A * std::pow(K, p.alpha) * std::pow(p.L, 1.0 - p.alpha);
}

double saving_rate(const SolowParams& p, double K) {
  if (p.saving_mode == SavingMode::constant) return p.s_max;
  const double z = p.K_F - K;
  if (z > 700) return p.s_max * std::exp(-z);  // underflow-safe tail
  return p.s_max / (1.0 + std::exp(z));
}

double step_capital(const SolowParams& p, double K) {
  return saving_rate(p, K) * production(p, K) + (1.0 - p.delta) * K;
}

std::vector<TrajectoryPoint> simulate(const SolowParams& p, double K0, int T) {
  if (T < 1) throw std::invalid_argument("simulate: T must be >= 1");
  if (K0 < 0) throw std::invalid_argument("simulate: K0 must be >= 0");
  std::vector<TrajectoryPoint> traj;
  traj.reserve(static_cast<size_t>(T) + 1);
  double K = K0;
  for (int t = 0; t <= T; ++t) {
    traj.push_back({t, K, production(p, K), saving_rate(p, K)});
    K = step_capital(p, K);
  }
  return traj;
}

namespace {

// Net accumulation; its roots are the fixed points of the capital map.
double net_gain(const SolowParams& p, double K) {
  return saving_rate(p, K) * production(p, K) - p.delta * K;
}

double bisect(const SolowParams& p, double lo, double hi, double g_lo) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-10 * mid) return mid;
    const double g_mid = net_gain(p, mid);
    if (g_mid == 0) return mid;
    if ((g_mid > 0) == (g_lo > 0)) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

EquilibriumSet find_equilibria(const SolowParams& p, double K_max, int n_scan) {
  if (!(K_max > 0)) throw std::invalid_argument("find_equilibria: K_max must be > 0");
  if (n_scan < 100) throw std::invalid_argument("find_equilibria: n_scan must be >= 100");

  // Log-spaced scan; roots of the sigmoid map can sit many orders of
  // magnitude apart, so a linear grid misses the low one.
  const double k_lo = K_max * 1e-14;
  const double ratio = std::pow(K_max / k_lo, 1.0 / (n_scan - 1));

  EquilibriumSet out;

  double prev_k = k_lo;
  double prev_g = net_gain(p, prev_k);

  // K = 0 is always a fixed point; it attracts iff capital decays just
  // above zero.
  out.equilibria.push_back(
      {0.0, prev_g < 0 ? Stability::stable : Stability::unstable});

  double k = k_lo;
  for (int i = 1; i < n_scan; ++i) {
    k = (i == n_scan - 1) ? K_max : k * ratio;
    const double g = net_gain(p, k);
    if (g == 0 || (g > 0) != (prev_g > 0)) {
      const double root = g == 0 ? k : bisect(p, prev_k, k, prev_g);
      // + to - crossing means accumulation above, decay below: stable.
      out.equilibria.push_back(
          {root, prev_g > 0 ? Stability::stable : Stability::unstable});
    }
    prev_k = k;
    prev_g = g;
  }
  out.open_at_k_max = prev_g > 0;
  return out;
}

}  // namespace ecg
