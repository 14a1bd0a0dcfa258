#include "ecg/io.hpp"

#include "ecg/fitness.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ecg {

namespace {

std::string fmt(double x) {
  if (std::isnan(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size()) return false;
  out = static_cast<int>(v);
  return true;
}

std::ifstream open_with_header(const std::string& path,
                               const std::string& expected) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string header;
  if (!std::getline(in, header) || header != expected)
    throw std::runtime_error(path + ": expected header `" + expected + "`");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

void check_write(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

TradeFlows parse_trade_csv(const std::string& path, CleaningReport* report) {
  auto in = open_with_header(path, "year,country,product,value");

  CleaningReport local;
  CleaningReport& rep = report ? *report : local;

  TradeFlows flows;
  std::set<std::tuple<int, std::string, std::string>> seen;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rep.total;
    const auto f = split(line);
    int year;
    double value;
    if (f.size() != 4 || !parse_int(f[0], year) || f[1].empty() ||
        f[2].empty() || !parse_double(f[3], value)) {
      ++rep.dropped_malformed;
      continue;
    }
    if (value <= 0) {
      ++rep.dropped_nonpositive;
      continue;
    }
    if (!seen.insert({year, f[1], f[2]}).second) {
      ++rep.dropped_duplicate;
      continue;
    }
    flows.records.push_back({year, f[1], f[2], value});
    ++rep.kept;
  }
  if (flows.records.empty())
    throw std::runtime_error(path + ": no valid trade rows");
  return flows;
}

MacroPanel parse_macro_csv(const std::string& path, CleaningReport* report) {
  auto in = open_with_header(
      path,
      "year,country,gdp_pc,capital_pc,employment_rate,human_capital,"
      "labor_share,population");

  CleaningReport local;
  CleaningReport& rep = report ? *report : local;

  MacroPanel panel;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rep.total;
    const auto f = split(line);
    int year;
    MacroObs o;
    if (f.size() != 8 || !parse_int(f[0], year) || f[1].empty() ||
        !parse_double(f[2], o.gdp_pc) || !parse_double(f[3], o.capital_pc) ||
        !parse_double(f[4], o.employment_rate) ||
        !parse_double(f[5], o.human_capital) ||
        !parse_double(f[6], o.labor_share) ||
        !parse_double(f[7], o.population)) {
      ++rep.dropped_malformed;
      continue;
    }
    const bool in_range = o.gdp_pc > 0 && o.capital_pc > 0 &&
                          o.employment_rate > 0 && o.employment_rate <= 1 &&
                          o.human_capital > 0 && o.labor_share > 0 &&
                          o.labor_share < 1 && o.population > 0;
    if (!in_range) {
      ++rep.dropped_out_of_range;
      continue;
    }
    if (!panel.observations.emplace(std::make_pair(f[1], year), o).second) {
      ++rep.dropped_duplicate;
      continue;
    }
    ++rep.kept;
  }
  if (panel.observations.empty())
    throw std::runtime_error(path + ": no valid macro rows");
  return panel;
}

DetrendedPanel parse_detrended_csv(const std::string& path) {
  auto in =
      open_with_header(path, "year,country,relative_gdp,detrended_input_growth");
  DetrendedPanel panel;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line);
    int year;
    double gdp, growth;
    if (f.size() != 4 || !parse_int(f[0], year) || f[1].empty() ||
        !parse_double(f[2], gdp) || !parse_double(f[3], growth))
      throw std::runtime_error(path + ": malformed row `" + line + "`");
    panel.observations.push_back({f[1], year, gdp, growth});
  }
  if (panel.observations.empty())
    throw std::runtime_error(path + ": no detrended rows");
  return panel;
}

std::map<int, std::map<std::string, double>> parse_fitness_csv(
    const std::string& path) {
  auto in = open_with_header(path, "year,country,fitness,rank");
  std::map<int, std::map<std::string, double>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line);
    int year;
    double fitness;
    if (f.size() != 4 || !parse_int(f[0], year) || f[1].empty() ||
        !parse_double(f[2], fitness))
      throw std::runtime_error(path + ": malformed row `" + line + "`");
    out[year][f[1]] = fitness;
  }
  if (out.empty()) throw std::runtime_error(path + ": no fitness rows");
  return out;
}

SolowParams parse_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  SolowParams p;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string key, eq, value;
    if (!(ss >> key)) continue;  // blank line
    if (!(ss >> eq >> value) || eq != "=")
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected `key = value`");
    auto num = [&]() {
      double v;
      if (!parse_double(value, v))
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": bad number `" + value + "`");
      return v;
    };
    if (key == "A") p.A = num();
    else if (key == "alpha") p.alpha = num();
    else if (key == "L") p.L = num();
    else if (key == "delta") p.delta = num();
    else if (key == "s_max") p.s_max = num();
    else if (key == "K_F") p.K_F = num();
    else if (key == "saving_mode") {
      if (value == "constant") p.saving_mode = SavingMode::constant;
      else if (value == "sigmoid") p.saving_mode = SavingMode::sigmoid;
      else
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": saving_mode must be constant or sigmoid");
    } else {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown key `" + key + "`");
    }
  }
  if (!(p.A > 0) || !(p.alpha > 0 && p.alpha < 1) || !(p.L > 0) ||
      !(p.delta > 0 && p.delta < 1) || !(p.s_max > 0 && p.s_max < 1) ||
      p.K_F < 0)
    throw std::runtime_error(path + ": parameters out of range");
  return p;
}

void write_trade(const std::string& path, const TradeFlows& flows) {
  auto out = open_out(path);
  out << "year,country,product,value\n";
  for (const auto& r : flows.records)
    out << r.year << ',' << r.country << ',' << r.product << ','
        << fmt(r.value) << '\n';
  check_write(out, path);
}

void write_macro(const std::string& path, const MacroPanel& panel) {
  auto out = open_out(path);
  out << "year,country,gdp_pc,capital_pc,employment_rate,human_capital,"
         "labor_share,population\n";
  for (const auto& [key, o] : panel.observations)
    out << key.second << ',' << key.first << ',' << fmt(o.gdp_pc) << ','
        << fmt(o.capital_pc) << ',' << fmt(o.employment_rate) << ','
        << fmt(o.human_capital) << ',' << fmt(o.labor_share) << ','
        << fmt(o.population) << '\n';
  check_write(out, path);
}

void write_fitness(const std::string& path, const FitnessResult& fit) {
  auto out = open_out(path);
  out << "year,country,fitness,rank\n";
  const auto ranks = rank_of(fit);
  std::vector<std::pair<std::string, double>> rows(fit.fitness.begin(),
                                                   fit.fitness.end());
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    return ranks.at(a.first) < ranks.at(b.first);
  });
  for (const auto& [country, f] : rows)
    out << fit.year << ',' << country << ',' << fmt(f) << ','
        << ranks.at(country) << '\n';
  check_write(out, path);
}

void write_complexity(const std::string& path, const FitnessResult& fit) {
  auto out = open_out(path);
  out << "year,product,complexity\n";
  for (const auto& [product, q] : fit.complexity)
    out << fit.year << ',' << product << ',' << fmt(q) << '\n';
  check_write(out, path);
}

void write_rca(const std::string& path, const RcaMatrix& rca) {
  auto out = open_out(path);
  out << "year,country,product,rca\n";
  for (Eigen::Index i = 0; i < rca.rca.rows(); ++i)
    for (Eigen::Index j = 0; j < rca.rca.cols(); ++j)
      out << rca.year << ',' << rca.countries[static_cast<size_t>(i)] << ','
          << rca.products[static_cast<size_t>(j)] << ',' << fmt(rca.rca(i, j))
          << '\n';
  check_write(out, path);
}

void write_matrix(const std::string& path, const CountryProductMatrix& m) {
  auto out = open_out(path);
  out << "year,country,product,m\n";
  for (Eigen::Index i = 0; i < m.m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.m.cols(); ++j)
      out << m.year << ',' << m.countries[static_cast<size_t>(i)] << ','
          << m.products[static_cast<size_t>(j)] << ','
          << (m.m(i, j) != 0 ? 1 : 0) << '\n';
  check_write(out, path);
}

void write_decomposition(const std::string& path,
                         const std::vector<GrowthDecomposition>& rows) {
  auto out = open_out(path);
  out << "year,country,y,a,alpha,term_k,term_e,term_h,input_growth\n";
  for (const auto& d : rows)
    out << d.year << ',' << d.country << ',' << fmt(d.y) << ',' << fmt(d.a)
        << ',' << fmt(d.alpha) << ',' << fmt(d.term_k) << ',' << fmt(d.term_e)
        << ',' << fmt(d.term_h) << ',' << fmt(d.input_growth) << '\n';
  check_write(out, path);
}

void write_detrended(const std::string& path, const DetrendedPanel& panel) {
  auto out = open_out(path);
  out << "year,country,relative_gdp,detrended_input_growth\n";
  for (const auto& o : panel.observations)
    out << o.year << ',' << o.country << ',' << fmt(o.relative_gdp) << ','
        << fmt(o.detrended_input_growth) << '\n';
  check_write(out, path);
}

namespace {

void write_kernel_rows(std::ofstream& out, const KernelEstimate& est,
                       bool two_dim) {
  for (size_t g = 0; g < est.grid1.size(); ++g) {
    out << fmt(est.grid1[g]) << ',';
    if (two_dim) out << fmt(est.grid2[g]) << ',';
    out << fmt(est.estimate[g]) << ','
        << (est.ci_low ? fmt((*est.ci_low)[g]) : "") << ','
        << (est.ci_high ? fmt((*est.ci_high)[g]) : "") << ','
        << fmt(est.n_effective[g]) << ',' << (est.supported[g] ? 1 : 0) << '\n';
  }
}

}  // namespace

void write_kernel_1d(const std::string& path, const KernelEstimate& est) {
  auto out = open_out(path);
  out << "x,estimate,ci_low,ci_high,n_effective,supported\n";
  write_kernel_rows(out, est, false);
  check_write(out, path);
}

void write_kernel_2d(const std::string& path, const KernelEstimate& est) {
  auto out = open_out(path);
  out << "x1,x2,estimate,ci_low,ci_high,n_effective,supported\n";
  write_kernel_rows(out, est, true);
  check_write(out, path);
}

void write_equilibria(const std::string& path, const EquilibriumSet& eq) {
  auto out = open_out(path);
  out << "k_star,stability\n";
  for (const auto& e : eq.equilibria)
    out << fmt(e.K_star) << ','
        << (e.stability == Stability::stable ? "stable" : "unstable") << '\n';
  check_write(out, path);
}

void write_trajectory(const std::string& path,
                      const std::vector<TrajectoryPoint>& traj) {
  auto out = open_out(path);
  out << "t,k,y,s\n";
  for (const auto& p : traj)
    out << p.t << ',' << fmt(p.K) << ',' << fmt(p.Y) << ',' << fmt(p.s) << '\n';
  check_write(out, path);
}

void write_cleaning_report(const std::string& path, const CleaningReport& r) {
  auto out = open_out(path);
  out << "metric,count\n";
  out << "total," << r.total << '\n';
  out << "kept," << r.kept << '\n';
  out << "dropped_nonpositive," << r.dropped_nonpositive << '\n';
  out << "dropped_malformed," << r.dropped_malformed << '\n';
  out << "dropped_duplicate," << r.dropped_duplicate << '\n';
  out << "dropped_out_of_range," << r.dropped_out_of_range << '\n';
  check_write(out, path);
}

}  // namespace ecg
