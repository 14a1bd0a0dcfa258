#ifndef ECG_TYPES_HPP
#define ECG_TYPES_HPP

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ecg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// One export flow: (year, country, product) -> value.
struct TradeRecord {
  int year;
  std::string country;
  std::string product;
  double value;
};

inline bool operator==(const TradeRecord& a, const TradeRecord& b) {
  return a.year == b.year && a.country == b.country && a.product == b.product &&
         a.value == b.value;
}

/// Validated export flows. Values are strictly positive and
/// (year, country, product) triples are unique.
struct TradeFlows {
  std::vector<TradeRecord> records;
};

inline bool operator==(const TradeFlows& a, const TradeFlows& b) {
  return a.records == b.records;
}

/// Binary country-product matrix for one year. Row/column order follows
/// the countries/products index lists; no all-zero row or column.
struct CountryProductMatrix {
  int year = 0;
  std::vector<std::string> countries;
  std::vector<std::string> products;
  Matrix m;  // entries 0 or 1
};

/// Balassa RCA values, same index discipline as CountryProductMatrix.
struct RcaMatrix {
  int year = 0;
  std::vector<std::string> countries;
  std::vector<std::string> products;
  Matrix rca;
};

/// One macro observation for a (country, year) cell.
struct MacroObs {
  double gdp_pc;
  double capital_pc;
  double employment_rate;  // in (0, 1]
  double human_capital;
  double labor_share;      // in (0, 1)
  double population;
};

inline bool operator==(const MacroObs& a, const MacroObs& b) {
  return a.gdp_pc == b.gdp_pc && a.capital_pc == b.capital_pc &&
         a.employment_rate == b.employment_rate &&
         a.human_capital == b.human_capital && a.labor_share == b.labor_share &&
         a.population == b.population;
}

struct MacroPanel {
  std::map<std::pair<std::string, int>, MacroObs> observations;
};

inline bool operator==(const MacroPanel& a, const MacroPanel& b) {
  return a.observations == b.observations;
}

/// Converged country fitness / product complexity scores with iteration
/// diagnostics. Both score vectors are normalized to mean 1.
struct FitnessResult {
  int year = 0;
  std::map<std::string, double> fitness;
  std::map<std::string, double> complexity;
  int iterations = 0;
  bool converged = false;
  int rank_stable_at = 0;   // iteration of the last country-ranking change
  bool floor_hit = false;   // some fitness component was clamped at the floor
};

/// One row of the growth decomposition y = a + alpha*k + (1-alpha)*e + (1-alpha)*h.
struct GrowthDecomposition {
  std::string country;
  int year = 0;
  double y = 0;            // GDP pc growth rate
  double a = 0;            // residual efficiency growth
  double alpha = 0;
  double term_k = 0;       // alpha * k
  double term_e = 0;       // (1 - alpha) * e
  double term_h = 0;       // (1 - alpha) * h
  double input_growth = 0; // term_k + term_e + term_h
};

/// Kernel-regression output on a fixed grid. For 1D estimates grid2 is
/// empty; for 2D it pairs with grid1 point-wise. Confidence bands are
/// present only after a bootstrap run.
struct KernelEstimate {
  std::vector<double> grid1;
  std::vector<double> grid2;
  std::vector<double> estimate;
  std::optional<std::vector<double>> ci_low;
  std::optional<std::vector<double>> ci_high;
  std::vector<double> n_effective;  // sum of kernel weights per grid point
  std::vector<bool> supported;      // n_effective >= support floor
  double bandwidth1 = 0;
  double bandwidth2 = 0;            // 0 for 1D estimates
  long dropped_resamples = 0;       // bootstrap values omitted for zero support
};

enum class SavingMode { constant, sigmoid };

/// Parameters of the capital-accumulation map.
struct SolowParams {
  double A = 1.0;      // technology level
  double alpha = 0.5;  // output elasticity of capital
  double L = 1.0;      // labor
  double delta = 0.1;  // depreciation
  double s_max = 0.2;  // saving ceiling
  double K_F = 0.0;    // subsistence threshold (sigmoid mode only)
  SavingMode saving_mode = SavingMode::constant;
};

enum class Stability { stable, unstable };

struct Equilibrium {
  double K_star;
  Stability stability;
};

/// Fixed points of the capital map, sorted ascending by K_star.
struct EquilibriumSet {
  std::vector<Equilibrium> equilibria;
  bool open_at_k_max = false;  // net gain still positive at the scan end
};

struct TrajectoryPoint {
  int t;
  double K;
  double Y;
  double s;
};

/// One data-quality violation found by validate_panel.
struct PanelViolation {
  std::string country;
  int year;
  std::string field;
  std::string reason;
};

/// Checks every MacroPanel invariant; an empty result means the panel is
/// valid. Violations are data, not errors.
std::vector<PanelViolation> validate_panel(const MacroPanel& panel);

}  // namespace ecg

#endif  // ECG_TYPES_HPP
