#include "ecg/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ecg {

std::map<int, double> growth_rate(const std::map<int, double>& series) {
  for (const auto& [year, value] : series)
    if (!(value > 0))
      throw std::runtime_error("growth_rate: non-positive value in year " +
                               std::to_string(year));
  std::map<int, double> rates;
  for (const auto& [year, value] : series) {
    auto prev = series.find(year - 1);
    if (prev != series.end()) rates[year] = std::log(value / prev->second);
  }
  if (rates.empty())
    throw std::runtime_error("growth_rate: need at least 2 consecutive years");
  return rates;
}

double estimate_alpha(const MacroPanel& panel, const std::string& country,
                      int year) {
  auto it = panel.observations.find({country, year});
  if (it == panel.observations.end())
    throw std::runtime_error("estimate_alpha: no observation for " + country +
                             " " + std::to_string(year));
  const double ls = it->second.labor_share;
  if (!(ls > 0 && ls < 1))
    throw std::runtime_error("estimate_alpha: labor share outside (0,1) for " +
                             country + " " + std::to_string(year));
  return 1.0 - ls;
}

GrowthDecomposition decompose(const MacroPanel& panel,
                              const std::string& country, int year,
                              std::optional<double> alpha_override) {
  auto cur = panel.observations.find({country, year});
  auto prev = panel.observations.find({country, year - 1});
  if (cur == panel.observations.end() || prev == panel.observations.end())
    throw std::runtime_error("decompose: need observations at " +
                             std::to_string(year - 1) + " and " +
                             std::to_string(year) + " for " + country);

  auto rate = [&](double now, double before, const char* field) {
    if (!(now > 0) || !(before > 0))
      throw std::runtime_error(std::string("decompose: non-positive ") + field +
                               " for " + country);
    return std::log(now / before);
  };

  GrowthDecomposition d;
  d.country = country;
  d.year = year;
  d.alpha = alpha_override ? *alpha_override : estimate_alpha(panel, country, year);
  d.y = rate(cur->second.gdp_pc, prev->second.gdp_pc, "gdp_pc");
  const double k = rate(cur->second.capital_pc, prev->second.capital_pc, "capital_pc");
  const double e =
      rate(cur->second.employment_rate, prev->second.employment_rate, "employment_rate");
  const double h =
      rate(cur->second.human_capital, prev->second.human_capital, "human_capital");
  d.term_k = d.alpha * k;
  d.term_e = (1.0 - d.alpha) * e;
  d.term_h = (1.0 - d.alpha) * h;
  d.input_growth = d.term_k + d.term_e + d.term_h;
  // a is the residual by definition; re-deriving y from the terms keeps
  // the decomposition identity free of rounding slack (the stored y moves
  // at most one ulp from the measured log difference)
  d.a = d.y - d.input_growth;
  d.y = ((d.a + d.term_k) + d.term_e) + d.term_h;
  return d;
}

std::vector<GrowthDecomposition> decompose_all(
    const MacroPanel& panel, std::optional<double> alpha_override) {
  std::vector<GrowthDecomposition> out;
  for (const auto& [key, obs] : panel.observations) {
    const auto& [country, year] = key;
    if (panel.observations.count({country, year - 1}))
      out.push_back(decompose(panel, country, year, alpha_override));
  }
  return out;
}

DetrendedPanel detrend(const std::vector<GrowthDecomposition>& decomps,
                       const MacroPanel& panel) {
  std::map<int, std::vector<const GrowthDecomposition*>> by_year;
  for (const auto& d : decomps) by_year[d.year].push_back(&d);

  DetrendedPanel out;
  for (const auto& [year, rows] : by_year) {
    if (rows.size() < 2) {
      out.excluded_years.push_back(year);
      continue;
    }
    double mean_growth = 0, mean_gdp = 0;
    for (const auto* d : rows) {
      mean_growth += d->input_growth;
      mean_gdp += panel.observations.at({d->country, year}).gdp_pc;
    }
    mean_growth /= static_cast<double>(rows.size());
    mean_gdp /= static_cast<double>(rows.size());
    for (const auto* d : rows) {
      const double gdp = panel.observations.at({d->country, year}).gdp_pc;
      out.observations.push_back(
          {d->country, year, gdp / mean_gdp, d->input_growth - mean_growth});
    }
  }
  return out;
}

std::map<std::string, Tertile> tertile_split(
    const std::map<std::string, double>& fitness_by_country) {
  const size_t n = fitness_by_country.size();
  if (n < 3) throw std::runtime_error("tertile_split: need at least 3 countries");

  std::vector<std::pair<std::string, double>> items(fitness_by_country.begin(),
                                                    fitness_by_country.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;
  });

  const size_t q = n / 3, r = n % 3;
  const size_t n_low = q + (r >= 1 ? 1 : 0);
  const size_t n_mid = q + (r >= 2 ? 1 : 0);

  std::map<std::string, Tertile> out;
  for (size_t i = 0; i < n; ++i) {
    Tertile t = i < n_low            ? Tertile::low
                : i < n_low + n_mid  ? Tertile::mid
                                     : Tertile::high;
    out[items[i].first] = t;
  }
  return out;
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& x) {
  const size_t n = x.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::runtime_error("spearman: length mismatch");
  if (x.size() < 2) throw std::runtime_error("spearman: need at least 2 points");

  const std::vector<double> rx = average_ranks(x), ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0)
    throw std::runtime_error("spearman: undefined for a constant series");
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace ecg
