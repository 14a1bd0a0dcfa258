#include "ecg/fitness.hpp"
#include "ecg/growth.hpp"
#include "ecg/io.hpp"
#include "ecg/kernel.hpp"
#include "ecg/rca.hpp"
#include "ecg/solow.hpp"
#include "ecg/synth.hpp"
#include "ecg/types.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace ecg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir);
}

// Every effective parameter of a run lands here, for reproducibility.
class Manifest {
 public:
  template <typename T>
  void add(const std::string& key, const T& value) {
    std::ostringstream ss;
    ss << value;
    entries_.emplace_back(key, ss.str());
  }
  void write(const std::string& dir) const {
    std::ofstream out(dir + "/run_manifest.txt");
    if (!out) throw IoError("cannot write " + dir + "/run_manifest.txt");
    for (const auto& [k, v] : entries_) out << k << " = " << v << "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::pair<int, int> parse_year_range(const std::string& spec) {
  const auto dots = spec.find("..");
  if (dots == std::string::npos) {
    const int y = std::stoi(spec);
    return {y, y};
  }
  const int a = std::stoi(spec.substr(0, dots));
  const int b = std::stoi(spec.substr(dots + 2));
  if (b < a) throw ValidationError("invalid year range " + spec);
  return {a, b};
}

std::set<int> years_in(const TradeFlows& flows) {
  std::set<int> out;
  for (const auto& r : flows.records) out.insert(r.year);
  return out;
}

struct FitnessRun {
  std::vector<FitnessResult> per_year;
};

FitnessRun run_fitness_years(const TradeFlows& flows, int from, int to,
                             double threshold, double tol, int max_iter) {
  FitnessRun run;
  const auto available = years_in(flows);
  for (int y = from; y <= to; ++y) {
    if (!available.count(y))
      throw ValidationError("no trade data for year " + std::to_string(y));
    const RcaMatrix rca = compute_rca(flows, y);
    const CountryProductMatrix m = binarize(rca, threshold);
    run.per_year.push_back(iterate_fitness(m, max_iter, tol));
  }
  return run;
}

void write_fitness_run(const std::string& dir, const FitnessRun& run) {
  {
    std::ofstream out(dir + "/fitness.csv");
    if (!out) throw IoError("cannot write " + dir + "/fitness.csv");
    out << "year,country,fitness,rank\n";
  }
  std::ofstream fit(dir + "/fitness.csv", std::ios::app);
  std::ofstream cpx(dir + "/complexity.csv");
  std::ofstream log(dir + "/convergence.csv");
  if (!fit || !cpx || !log) throw IoError("cannot write fitness tables in " + dir);
  cpx << "year,product,complexity\n";
  log << "year,iterations,rank_stable_at,converged\n";
  char buf[40];
  auto fmt = [&](double x) {
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
  };
  for (const auto& res : run.per_year) {
    const auto ranks = rank_of(res);
    std::vector<std::pair<std::string, double>> rows(res.fitness.begin(),
                                                     res.fitness.end());
    std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
      return ranks.at(a.first) < ranks.at(b.first);
    });
    for (const auto& [c, f] : rows)
      fit << res.year << ',' << c << ',' << fmt(f) << ',' << ranks.at(c) << '\n';
    for (const auto& [p, q] : res.complexity)
      cpx << res.year << ',' << p << ',' << fmt(q) << '\n';
    log << res.year << ',' << res.iterations << ',' << res.rank_stable_at << ','
        << (res.converged ? 1 : 0) << '\n';
  }
}

struct KernelInputs {
  std::vector<double> x1;  // relative GDP
  std::vector<double> x2;  // fitness (2D only)
  std::vector<double> y;   // detrended input growth
};

KernelInputs select_kernel_inputs(
    const DetrendedPanel& panel,
    const std::map<int, std::map<std::string, double>>* fitness,
    const std::optional<std::string>& tertile, bool two_dim) {
  KernelInputs in;
  std::map<int, std::map<std::string, Tertile>> tertiles;
  if (tertile) {
    if (!fitness)
      throw ValidationError("--tertile requires --fitness");
    for (const auto& [year, by_country] : *fitness)
      tertiles[year] = tertile_split(by_country);
  }
  const Tertile want = tertile && *tertile == "low" ? Tertile::low : Tertile::high;
  for (const auto& o : panel.observations) {
    if (tertile) {
      auto yt = tertiles.find(o.year);
      if (yt == tertiles.end()) continue;
      auto ct = yt->second.find(o.country);
      if (ct == yt->second.end() || ct->second != want) continue;
    }
    if (two_dim) {
      if (!fitness) throw ValidationError("--dim 2 requires --fitness");
      auto yf = fitness->find(o.year);
      if (yf == fitness->end()) continue;
      auto cf = yf->second.find(o.country);
      if (cf == yf->second.end()) continue;
      in.x2.push_back(cf->second);
    }
    in.x1.push_back(o.relative_gdp);
    in.y.push_back(o.detrended_input_growth);
  }
  if (in.x1.empty()) throw ValidationError("no observations selected for kernel");
  return in;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Economic-complexity growth toolkit"};
  app.require_subcommand(1);

  // rca
  auto* rca_cmd = app.add_subcommand("rca", "Compute and binarize the RCA matrix");
  std::string rca_trade, rca_out;
  int rca_year = 0;
  double rca_threshold = 1.0;
  rca_cmd->add_option("--trade", rca_trade, "trade CSV")->required();
  rca_cmd->add_option("--year", rca_year, "year to process")->required();
  rca_cmd->add_option("--threshold", rca_threshold, "binarization threshold");
  rca_cmd->add_option("--out", rca_out, "output directory")->required();

  // fitness
  auto* fit_cmd = app.add_subcommand("fitness", "Per-year fitness/complexity scores");
  std::string fit_trade, fit_years, fit_out;
  double fit_tol = 1e-8, fit_threshold = 1.0;
  int fit_max_iter = 1000;
  fit_cmd->add_option("--trade", fit_trade, "trade CSV")->required();
  fit_cmd->add_option("--years", fit_years, "year or A..B range")->required();
  fit_cmd->add_option("--threshold", fit_threshold, "binarization threshold");
  fit_cmd->add_option("--tol", fit_tol, "convergence tolerance");
  fit_cmd->add_option("--max-iter", fit_max_iter, "iteration budget");
  fit_cmd->add_option("--out", fit_out, "output directory")->required();

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "Growth accounting + detrending");
  std::string dec_macro, dec_out;
  double dec_alpha = -1;
  dec_cmd->add_option("--macro", dec_macro, "macro panel CSV")->required();
  dec_cmd->add_option("--alpha", dec_alpha, "fixed alpha override");
  dec_cmd->add_option("--out", dec_out, "output directory")->required();

  // kernel
  auto* ker_cmd = app.add_subcommand("kernel", "Kernel regression of input growth");
  std::string ker_detrended, ker_fitness, ker_tertile, ker_out;
  int ker_dim = 1, ker_grid_n = 100, ker_b = 1000;
  double ker_bw = 0, ker_bw2 = 0, ker_level = 0.90;
  std::uint64_t ker_seed = 0;
  ker_cmd->add_option("--detrended", ker_detrended, "detrended CSV")->required();
  ker_cmd->add_option("--fitness", ker_fitness, "fitness CSV (tertile/2D runs)");
  ker_cmd->add_option("--dim", ker_dim, "1 or 2")->check(CLI::IsMember({1, 2}));
  ker_cmd->add_option("--tertile", ker_tertile, "low or high")
      ->check(CLI::IsMember({"low", "high"}));
  ker_cmd->add_option("--bandwidth", ker_bw, "bandwidth (0 = Silverman)");
  ker_cmd->add_option("--bandwidth2", ker_bw2, "second-axis bandwidth (0 = Silverman)");
  ker_cmd->add_option("--grid-n", ker_grid_n, "grid points per axis");
  ker_cmd->add_option("--bootstrap-b", ker_b, "bootstrap resamples (0 = no bands)");
  ker_cmd->add_option("--level", ker_level, "confidence level");
  ker_cmd->add_option("--seed", ker_seed, "bootstrap seed");
  ker_cmd->add_option("--out", ker_out, "output directory")->required();

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Capital accumulation trajectory");
  std::string sim_params, sim_out;
  double sim_k0 = 0;
  int sim_steps = 100;
  sim_cmd->add_option("--params", sim_params, "parameter file")->required();
  sim_cmd->add_option("--k0", sim_k0, "initial capital")->required();
  sim_cmd->add_option("--steps", sim_steps, "number of steps");
  sim_cmd->add_option("--out", sim_out, "output directory")->required();

  // equilibria
  auto* eq_cmd = app.add_subcommand("equilibria", "Locate and classify fixed points");
  std::string eq_params, eq_out;
  double eq_kmax = 200;
  int eq_scan = 1000;
  eq_cmd->add_option("--params", eq_params, "parameter file")->required();
  eq_cmd->add_option("--k-max", eq_kmax, "scan upper bound");
  eq_cmd->add_option("--n-scan", eq_scan, "scan resolution");
  eq_cmd->add_option("--out", eq_out, "output directory")->required();

  // synth
  auto* syn_cmd = app.add_subcommand("synth", "Generate a synthetic world");
  std::string syn_fitness_spec, syn_out;
  int syn_countries = 12, syn_steps = 50;
  std::uint64_t syn_seed = 0;
  syn_cmd->add_option("--countries", syn_countries, "number of countries");
  syn_cmd->add_option("--steps", syn_steps, "simulated years");
  syn_cmd->add_option("--seed", syn_seed, "generator seed");
  syn_cmd->add_option("--fitness-spec", syn_fitness_spec,
                      "file with one fitness level per line");
  syn_cmd->add_option("--out", syn_out, "output directory")->required();

  // pipeline
  auto* pipe_cmd = app.add_subcommand("pipeline", "Full analysis chain");
  std::string pipe_in, pipe_out;
  double pipe_threshold = 1.0, pipe_tol = 1e-8, pipe_level = 0.90;
  int pipe_max_iter = 1000, pipe_grid_n = 100, pipe_grid_n_2d = 25, pipe_b = 1000;
  std::uint64_t pipe_seed = 0;
  pipe_cmd->add_option("--in", pipe_in, "directory with trade.csv and macro.csv")
      ->required();
  pipe_cmd->add_option("--threshold", pipe_threshold, "binarization threshold");
  pipe_cmd->add_option("--tol", pipe_tol, "fitness tolerance");
  pipe_cmd->add_option("--max-iter", pipe_max_iter, "fitness iteration budget");
  pipe_cmd->add_option("--grid-n", pipe_grid_n, "1D kernel grid points");
  pipe_cmd->add_option("--grid-n-2d", pipe_grid_n_2d, "2D kernel grid per axis");
  pipe_cmd->add_option("--bootstrap-b", pipe_b, "bootstrap resamples for 1D bands");
  pipe_cmd->add_option("--level", pipe_level, "confidence level");
  pipe_cmd->add_option("--seed", pipe_seed, "bootstrap seed");
  pipe_cmd->add_option("--out", pipe_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;  // --help exits 0
  }

  if (rca_cmd->parsed()) {
    ensure_dir(rca_out);
    CleaningReport report;
    const TradeFlows flows = parse_trade_csv(rca_trade, &report);
    if (!years_in(flows).count(rca_year))
      throw ValidationError("no trade data for year " + std::to_string(rca_year));
    const RcaMatrix rca = compute_rca(flows, rca_year);
    const CountryProductMatrix m = binarize(rca, rca_threshold);
    write_rca(rca_out + "/rca.csv", rca);
    write_matrix(rca_out + "/matrix.csv", m);
    write_cleaning_report(rca_out + "/cleaning_report.csv", report);
    Manifest mf;
    mf.add("subcommand", "rca");
    mf.add("trade", rca_trade);
    mf.add("year", rca_year);
    mf.add("threshold", rca_threshold);
    mf.write(rca_out);
    return kExitOk;
  }

  if (fit_cmd->parsed()) {
    ensure_dir(fit_out);
    CleaningReport report;
    const TradeFlows flows = parse_trade_csv(fit_trade, &report);
    const auto [from, to] = parse_year_range(fit_years);
    const FitnessRun run =
        run_fitness_years(flows, from, to, fit_threshold, fit_tol, fit_max_iter);
    write_fitness_run(fit_out, run);
    write_cleaning_report(fit_out + "/cleaning_report.csv", report);
    Manifest mf;
    mf.add("subcommand", "fitness");
    mf.add("trade", fit_trade);
    mf.add("years", fit_years);
    mf.add("threshold", fit_threshold);
    mf.add("tol", fit_tol);
    mf.add("max_iter", fit_max_iter);
    mf.write(fit_out);
    return kExitOk;
  }

  if (dec_cmd->parsed()) {
    ensure_dir(dec_out);
    CleaningReport report;
    const MacroPanel panel = parse_macro_csv(dec_macro, &report);
    const auto violations = validate_panel(panel);
    if (!violations.empty()) {
      std::ostringstream msg;
      msg << "panel validation failed:";
      for (const auto& v : violations)
        msg << "\n  " << v.country << " " << v.year << " " << v.field << ": "
            << v.reason;
      throw ValidationError(msg.str());
    }
    std::optional<double> alpha;
    if (dec_alpha >= 0) {
      if (!(dec_alpha > 0 && dec_alpha < 1))
        throw ValidationError("--alpha must be in (0,1)");
      alpha = dec_alpha;
    }
    const auto decomps = decompose_all(panel, alpha);
    const auto detrended = detrend(decomps, panel);
    write_decomposition(dec_out + "/decomposition.csv", decomps);
    write_detrended(dec_out + "/detrended.csv", detrended);
    write_cleaning_report(dec_out + "/cleaning_report.csv", report);
    Manifest mf;
    mf.add("subcommand", "decompose");
    mf.add("macro", dec_macro);
    mf.add("alpha", alpha ? std::to_string(*alpha) : "per-observation");
    for (int y : detrended.excluded_years) mf.add("excluded_year", y);
    mf.write(dec_out);
    return kExitOk;
  }

  if (ker_cmd->parsed()) {
    ensure_dir(ker_out);
    const DetrendedPanel panel = parse_detrended_csv(ker_detrended);
    std::optional<std::map<int, std::map<std::string, double>>> fitness;
    if (!ker_fitness.empty()) fitness = parse_fitness_csv(ker_fitness);
    std::optional<std::string> tertile;
    if (!ker_tertile.empty()) tertile = ker_tertile;

    const KernelInputs in = select_kernel_inputs(
        panel, fitness ? &*fitness : nullptr, tertile, ker_dim == 2);

    const double h1 = ker_bw > 0 ? ker_bw : bandwidth_default(in.x1);
    KernelEstimate est;
    if (ker_dim == 1) {
      const auto grid = make_grid(
          *std::min_element(in.x1.begin(), in.x1.end()),
          *std::max_element(in.x1.begin(), in.x1.end()), ker_grid_n);
      est = ker_b > 0 ? bootstrap_band_1d(in.x1, in.y, grid, h1, ker_b,
                                          ker_level, ker_seed)
                      : nw_1d(in.x1, in.y, grid, h1);
      write_kernel_1d(ker_out + "/kernel_1d.csv", est);
    } else {
      const double h2 = ker_bw2 > 0 ? ker_bw2 : bandwidth_default(in.x2);
      const auto ax1 = make_grid(
          *std::min_element(in.x1.begin(), in.x1.end()),
          *std::max_element(in.x1.begin(), in.x1.end()), ker_grid_n);
      const auto ax2 = make_grid(
          *std::min_element(in.x2.begin(), in.x2.end()),
          *std::max_element(in.x2.begin(), in.x2.end()), ker_grid_n);
      std::vector<double> g1, g2;
      for (double a : ax1)
        for (double b : ax2) {
          g1.push_back(a);
          g2.push_back(b);
        }
      est = ker_b > 0 ? bootstrap_band_2d(in.x1, in.x2, in.y, g1, g2, h1, h2,
                                          ker_b, ker_level, ker_seed)
                      : nw_2d(in.x1, in.x2, in.y, g1, g2, h1, h2);
      write_kernel_2d(ker_out + "/kernel_2d.csv", est);
    }
    Manifest mf;
    mf.add("subcommand", "kernel");
    mf.add("detrended", ker_detrended);
    mf.add("fitness", ker_fitness.empty() ? "-" : ker_fitness);
    mf.add("dim", ker_dim);
    mf.add("tertile", ker_tertile.empty() ? "-" : ker_tertile);
    mf.add("bandwidth1", est.bandwidth1);
    mf.add("bandwidth2", est.bandwidth2);
    mf.add("grid_n", ker_grid_n);
    mf.add("bootstrap_b", ker_b);
    mf.add("level", ker_level);
    mf.add("seed", ker_seed);
    mf.add("n_observations", in.x1.size());
    mf.add("dropped_resamples", est.dropped_resamples);
    mf.write(ker_out);
    return kExitOk;
  }

  if (sim_cmd->parsed()) {
    ensure_dir(sim_out);
    const SolowParams p = parse_params(sim_params);
    if (sim_k0 < 0) throw ValidationError("--k0 must be >= 0");
    if (sim_steps < 1) throw ValidationError("--steps must be >= 1");
    write_trajectory(sim_out + "/trajectory.csv", simulate(p, sim_k0, sim_steps));
    Manifest mf;
    mf.add("subcommand", "simulate");
    mf.add("params", sim_params);
    mf.add("k0", sim_k0);
    mf.add("steps", sim_steps);
    mf.write(sim_out);
    return kExitOk;
  }

  if (eq_cmd->parsed()) {
    ensure_dir(eq_out);
    const SolowParams p = parse_params(eq_params);
    const EquilibriumSet eq = find_equilibria(p, eq_kmax, eq_scan);
    write_equilibria(eq_out + "/equilibria.csv", eq);
    Manifest mf;
    mf.add("subcommand", "equilibria");
    mf.add("params", eq_params);
    mf.add("k_max", eq_kmax);
    mf.add("n_scan", eq_scan);
    mf.add("open_at_k_max", eq.open_at_k_max ? 1 : 0);
    mf.write(eq_out);
    if (eq.open_at_k_max)
      std::cerr << "warning: net gain still positive at K_max; an upper "
                   "equilibrium may lie beyond the scan\n";
    return kExitOk;
  }

  if (syn_cmd->parsed()) {
    ensure_dir(syn_out);
    std::vector<double> levels;
    if (!syn_fitness_spec.empty()) {
      std::ifstream in(syn_fitness_spec);
      if (!in) throw IoError("cannot open " + syn_fitness_spec);
      double f;
      while (in >> f) levels.push_back(f);
      if (static_cast<int>(levels.size()) != syn_countries)
        throw ValidationError("--fitness-spec must list exactly " +
                              std::to_string(syn_countries) + " levels");
    } else {
      // default: one decade of fitness, geometrically spaced
      for (int i = 0; i < syn_countries; ++i)
        levels.push_back(0.5 * std::pow(10.0, static_cast<double>(i) /
                                                  (syn_countries - 1)));
    }
    const SynthWorld world = synth_world(syn_countries, syn_steps, syn_seed, levels);
    write_trade(syn_out + "/trade.csv", world.flows);
    write_macro(syn_out + "/macro.csv", world.panel);
    {
      std::ofstream out(syn_out + "/true_fitness.csv");
      if (!out) throw IoError("cannot write " + syn_out + "/true_fitness.csv");
      out << "country,fitness\n";
      for (const auto& [c, f] : world.true_fitness) out << c << ',' << f << '\n';
    }
    Manifest mf;
    mf.add("subcommand", "synth");
    mf.add("countries", syn_countries);
    mf.add("steps", syn_steps);
    mf.add("seed", syn_seed);
    mf.add("fitness_spec", syn_fitness_spec.empty() ? "default-decade"
                                                    : syn_fitness_spec);
    mf.write(syn_out);
    return kExitOk;
  }

  if (pipe_cmd->parsed()) {
    ensure_dir(pipe_out);
    CleaningReport trade_report, macro_report;
    const TradeFlows flows = parse_trade_csv(pipe_in + "/trade.csv", &trade_report);
    const MacroPanel panel = parse_macro_csv(pipe_in + "/macro.csv", &macro_report);
    const auto violations = validate_panel(panel);
    if (!violations.empty())
      throw ValidationError("panel validation failed (" +
                            std::to_string(violations.size()) + " violations)");

    const auto years = years_in(flows);
    FitnessRun run = run_fitness_years(flows, *years.begin(), *years.rbegin(),
                                       pipe_threshold, pipe_tol, pipe_max_iter);
    write_fitness_run(pipe_out, run);

    const auto decomps = decompose_all(panel);
    const auto detrended = detrend(decomps, panel);
    write_decomposition(pipe_out + "/decomposition.csv", decomps);
    write_detrended(pipe_out + "/detrended.csv", detrended);

    std::map<int, std::map<std::string, double>> fitness;
    for (const auto& res : run.per_year) fitness[res.year] = res.fitness;

    auto kernel_1d_for = [&](std::optional<std::string> tertile,
                             const std::string& file) {
      const KernelInputs in =
          select_kernel_inputs(detrended, &fitness, tertile, false);
      const double h = bandwidth_default(in.x1);
      const auto grid = make_grid(
          *std::min_element(in.x1.begin(), in.x1.end()),
          *std::max_element(in.x1.begin(), in.x1.end()), pipe_grid_n);
      const KernelEstimate est =
          pipe_b > 0 ? bootstrap_band_1d(in.x1, in.y, grid, h, pipe_b,
                                         pipe_level, pipe_seed)
                     : nw_1d(in.x1, in.y, grid, h);
      write_kernel_1d(pipe_out + "/" + file, est);
    };
    kernel_1d_for(std::nullopt, "kernel_all.csv");
    kernel_1d_for(std::string("low"), "kernel_low.csv");
    kernel_1d_for(std::string("high"), "kernel_high.csv");

    {
      const KernelInputs in =
          select_kernel_inputs(detrended, &fitness, std::nullopt, true);
      const double h1 = bandwidth_default(in.x1);
      const double h2 = bandwidth_default(in.x2);
      const auto ax1 = make_grid(
          *std::min_element(in.x1.begin(), in.x1.end()),
          *std::max_element(in.x1.begin(), in.x1.end()), pipe_grid_n_2d);
      const auto ax2 = make_grid(
          *std::min_element(in.x2.begin(), in.x2.end()),
          *std::max_element(in.x2.begin(), in.x2.end()), pipe_grid_n_2d);
      std::vector<double> g1, g2;
      for (double a : ax1)
        for (double b : ax2) {
          g1.push_back(a);
          g2.push_back(b);
        }
      write_kernel_2d(pipe_out + "/kernel_2d.csv",
                      nw_2d(in.x1, in.x2, in.y, g1, g2, h1, h2));
    }

    write_cleaning_report(pipe_out + "/trade_cleaning_report.csv", trade_report);
    write_cleaning_report(pipe_out + "/macro_cleaning_report.csv", macro_report);
    Manifest mf;
    mf.add("subcommand", "pipeline");
    mf.add("in", pipe_in);
    mf.add("threshold", pipe_threshold);
    mf.add("tol", pipe_tol);
    mf.add("max_iter", pipe_max_iter);
    mf.add("grid_n", pipe_grid_n);
    mf.add("grid_n_2d", pipe_grid_n_2d);
    mf.add("bootstrap_b", pipe_b);
    mf.add("level", pipe_level);
    mf.add("seed", pipe_seed);
    mf.write(pipe_out);
    return kExitOk;
  }

  return kExitValidation;  // unreachable with require_subcommand
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
