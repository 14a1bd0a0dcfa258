#include "ecg/synth.hpp"

#include "ecg/rng.hpp"
#include "ecg/solow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ecg {

namespace {

std::string country_name(int i) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "C%02d", i);
  return buf;
}

std::string product_name(int p) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "P%03d", p);
  return buf;
}

}  // namespace

SynthWorld synth_world(int n_countries, int T, std::uint64_t seed,
                       const std::vector<double>& fitness_levels,
                       const SynthConfig& cfg) {
  if (n_countries < 6)
    throw std::invalid_argument("synth_world: need at least 6 countries");
  if (static_cast<int>(fitness_levels.size()) != n_countries)
    throw std::invalid_argument("synth_world: fitness_levels size mismatch");
  if (T < 20) throw std::invalid_argument("synth_world: T must be >= 20");
  for (double f : fitness_levels)
    if (!(f > 0)) throw std::invalid_argument("synth_world: fitness must be > 0");

  const double f_max = *std::max_element(fitness_levels.begin(),
                                         fitness_levels.end());

  SynthWorld world;
  for (int i = 0; i < n_countries; ++i) {
    const std::string name = country_name(i);
    const double F = fitness_levels[static_cast<size_t>(i)];
    world.true_fitness[name] = F;

    SolowParams p;
    p.A = cfg.A;
    p.alpha = cfg.alpha;
    p.L = cfg.L;
    p.delta = cfg.delta;
    p.s_max = cfg.s_max;
    p.K_F = cfg.K_F0 / F;  // barrier falls with fitness
    p.saving_mode = SavingMode::sigmoid;

    Rng macro_rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
    // Start barely past the country's own take-off point: a slow laminar
    // phase first, then a take-off at a GDP level set by the barrier.
    // Lower fitness -> higher barrier -> later and richer take-off.
    const double k_rich =
        std::pow(cfg.s_max * cfg.A / cfg.delta, 1.0 / (1.0 - cfg.alpha)) * cfg.L;
    double k_u = 0.0;  // highest unstable interior equilibrium, if any
    for (const auto& e : find_equilibria(p, 2.0 * k_rich).equilibria)
      if (e.K_star > 0 && e.stability == Stability::unstable) k_u = e.K_star;
    const double K0 = k_u > 0 ? k_u * (1.005 + 0.01 * macro_rng.uniform())
                              : p.K_F * (0.5 + 0.2 * macro_rng.uniform());
    const auto traj = simulate(p, K0, T);

    double employment = 0.30;
    double human_capital = 1.0;
    for (const auto& pt : traj) {
      const double gain = saving_rate(p, pt.K) * production(p, pt.K) -
                          p.delta * pt.K;
      const bool high_growth = gain > cfg.growth_frac * p.delta * pt.K;
      if (high_growth) {
        employment += 0.15 * employment * (1.0 - employment / 0.65);
        human_capital += 0.10 * human_capital * (1.0 - human_capital / 3.0);
      }
      MacroObs obs;
      obs.capital_pc = pt.K;
      obs.gdp_pc = production(p, pt.K) *
                   std::exp(macro_rng.normal(0.0, cfg.a_noise_sd));
      obs.employment_rate = employment;
      obs.human_capital = human_capital;
      obs.labor_share = cfg.labor_share;
      obs.population = 1.0;
      world.panel.observations[{name, cfg.start_year + pt.t}] = obs;
    }
  }

  // Nested export staircase: country i exports a fitness-proportional
  // prefix of the product list, with seeded flips.
  for (int i = 0; i < n_countries; ++i) {
    const double F = fitness_levels[static_cast<size_t>(i)];
    const int d = std::clamp(
        static_cast<int>(std::lround(cfg.n_products * F / f_max)), 1,
        cfg.n_products);
    Rng trade_rng =
        Rng::stream(seed, 0x72616465ULL + static_cast<std::uint64_t>(i));
    std::vector<bool> exports(static_cast<size_t>(cfg.n_products));
    for (int p = 0; p < cfg.n_products; ++p) {
      bool cell = p < d;
      if (trade_rng.uniform() < cfg.flip_rate) cell = !cell;
      exports[static_cast<size_t>(p)] = cell;
    }
    for (int t = 0; t <= T; ++t)
      for (int p = 0; p < cfg.n_products; ++p)
        if (exports[static_cast<size_t>(p)])
          world.flows.records.push_back(
              {cfg.start_year + t, country_name(i), product_name(p),
               std::exp(trade_rng.normal(0.0, cfg.value_noise_sd))});
  }

  return world;
}

}  // namespace ecg
