#ifndef ECG_IO_HPP
#define ECG_IO_HPP

#include "ecg/growth.hpp"
#include "ecg/types.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecg {

/// Filesystem-level failure (open/write); distinct from data validation
/// errors so callers can map it to a different exit code.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Row accounting for one parse: kept + dropped() always equals total.
struct CleaningReport {
  long total = 0;
  long kept = 0;
  long dropped_nonpositive = 0;
  long dropped_malformed = 0;
  long dropped_duplicate = 0;
  long dropped_out_of_range = 0;
  long dropped() const {
    return dropped_nonpositive + dropped_malformed + dropped_duplicate +
           dropped_out_of_range;
  }
};

/// Header `year,country,product,value`. Rows with value <= 0, malformed
/// numbers or duplicate keys are dropped into the report; a bad header or
/// zero surviving rows throws.
TradeFlows parse_trade_csv(const std::string& path,
                           CleaningReport* report = nullptr);

/// Header `year,country,gdp_pc,capital_pc,employment_rate,human_capital,
/// labor_share,population`; out-of-range rows dropped into the report.
MacroPanel parse_macro_csv(const std::string& path,
                           CleaningReport* report = nullptr);

/// Header `year,country,relative_gdp,detrended_input_growth`.
DetrendedPanel parse_detrended_csv(const std::string& path);

/// Header `year,country,fitness,rank`; rank column is ignored on input.
/// Returns fitness maps keyed by year.
std::map<int, std::map<std::string, double>> parse_fitness_csv(
    const std::string& path);

/// Flat `key = value` simulator parameter file.
SolowParams parse_params(const std::string& path);

// Output tables. Column orders are the external contract; floats are
// written with 17 significant digits for lossless round-trips.
void write_trade(const std::string& path, const TradeFlows& flows);
void write_macro(const std::string& path, const MacroPanel& panel);
void write_fitness(const std::string& path, const FitnessResult& fit);
void write_complexity(const std::string& path, const FitnessResult& fit);
void write_rca(const std::string& path, const RcaMatrix& rca);
void write_matrix(const std::string& path, const CountryProductMatrix& m);
void write_decomposition(const std::string& path,
                         const std::vector<GrowthDecomposition>& rows);
void write_detrended(const std::string& path, const DetrendedPanel& panel);
void write_kernel_1d(const std::string& path, const KernelEstimate& est);
void write_kernel_2d(const std::string& path, const KernelEstimate& est);
void write_equilibria(const std::string& path, const EquilibriumSet& eq);
void write_trajectory(const std::string& path,
                      const std::vector<TrajectoryPoint>& traj);
void write_cleaning_report(const std::string& path, const CleaningReport& r);

}  // namespace ecg

#endif  // ECG_IO_HPP
