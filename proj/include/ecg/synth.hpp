#ifndef ECG_SYNTH_HPP
#define ECG_SYNTH_HPP

#include "ecg/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ecg {

/// Knobs of the synthetic multi-country generator. Defaults keep the
/// fitness signal recoverable at a dozen countries.
struct SynthConfig {
  double K_F0 = 10.0;      // subsistence threshold at fitness 1; K_F = K_F0 / F
  double s_max = 0.4;
  double A = 1.0;
  double alpha = 0.5;
  double delta = 0.05;
  double L = 1.0;
  int n_products = 60;
  double flip_rate = 0.05;   // export-matrix noise
  double value_noise_sd = 0.3;  // lognormal sd on export values
  double a_noise_sd = 0.01;  // multiplicative GDP noise
  double labor_share = 0.6;
  double growth_frac = 0.5;  // net gain above this fraction of delta*K
                             // marks the high-growth phase
  int start_year = 1960;
};

struct SynthWorld {
  MacroPanel panel;
  TradeFlows flows;
  std::map<std::string, double> true_fitness;
};

/// Generates a world of countries climbing out of the subsistence trap,
/// each with an industrialization threshold falling in its fitness, plus
/// a nested export basket whose recovered fitness tracks the true one.
/// Deterministic given seed; per-country streams derive from
/// (seed, country index).
SynthWorld synth_world(int n_countries, int T, std::uint64_t seed,
                       const std::vector<double>& fitness_levels,
                       const SynthConfig& cfg = {});

}  // namespace ecg

#endif  // ECG_SYNTH_HPP
