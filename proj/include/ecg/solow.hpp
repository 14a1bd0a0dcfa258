#ifndef ECG_SOLOW_HPP
#define ECG_SOLOW_HPP

#include "ecg/types.hpp"

#include <vector>

namespace ecg {

/// Cobb-Douglas output Y = A * K^alpha * L^(1-alpha).
double production(const SolowParams& p, double K);

/// Saving rate at capital level K: the ceiling s_max in constant mode,
/// s_max / (1 + exp(K_F - K)) in sigmoid mode (overflow-safe).
double saving_rate(const SolowParams& p, double K);

/// One step of the accumulation map K' = s(K) Y(K) + (1 - delta) K.
double step_capital(const SolowParams& p, double K);

/// Iterates step_capital for T steps from K0, recording (t, K, Y, s)
/// including the initial state at t = 0.
std::vector<TrajectoryPoint> simulate(const SolowParams& p, double K0, int T);

/// Fixed points of the capital map in [0, K_max]: brackets sign changes
/// of g(K) = s(K) Y(K) - delta K on a log-spaced scan, refines by
/// bisection, classifies stability by the direction of the sign change.
/// K = 0 is always included, classified from the sign of g just above 0.
EquilibriumSet find_equilibria(const SolowParams& p, double K_max,
                               int n_scan = 1000);

}  // namespace ecg

#endif  // ECG_SOLOW_HPP
