#ifndef ECG_GROWTH_HPP
#define ECG_GROWTH_HPP

#include "ecg/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ecg {

enum class Tertile { low, mid, high };

/// One detrended observation behind the pooled regressions: per-year mean
/// removed from input growth, GDP divided by the per-year mean.
struct DetrendedObs {
  std::string country;
  int year;
  double relative_gdp;             // gdp_pc / cross-country mean of the year
  double detrended_input_growth;   // input_growth - cross-country mean of the year
};

struct DetrendedPanel {
  std::vector<DetrendedObs> observations;
  std::vector<int> excluded_years;  // years with a single country
};

/// Log-difference growth rates keyed by year; the first year of the
/// series has none. Throws on non-positive values, naming the year.
std::map<int, double> growth_rate(const std::map<int, double>& series);

/// Capital share of income: 1 - labor share of the observation.
double estimate_alpha(const MacroPanel& panel, const std::string& country,
                      int year);

/// Splits GDP pc growth at (country, year) into capital, employment and
/// human-capital contributions plus the efficiency residual. A fixed
/// alpha_override replaces the per-observation income-share estimate.
GrowthDecomposition decompose(const MacroPanel& panel,
                              const std::string& country, int year,
                              std::optional<double> alpha_override = {});

/// All decompositions computable from the panel (every country-year with
/// a predecessor year).
std::vector<GrowthDecomposition> decompose_all(
    const MacroPanel& panel, std::optional<double> alpha_override = {});

/// Removes the per-year global trend; years with fewer than two
/// countries are excluded and listed.
DetrendedPanel detrend(const std::vector<GrowthDecomposition>& decomps,
                       const MacroPanel& panel);

/// Per-year split into three fitness groups of near-equal size, remainder
/// assigned to the lower groups. Throws with fewer than 3 countries.
std::map<std::string, Tertile> tertile_split(
    const std::map<std::string, double>& fitness_by_country);

/// Spearman rank correlation with average-rank tie handling. Throws on
/// length mismatch or a constant series.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ecg

#endif  // ECG_GROWTH_HPP
