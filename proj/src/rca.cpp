#include "ecg/rca.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ecg {

RcaMatrix compute_rca(const TradeFlows& flows, int year, DropReport* report) {
  std::map<std::string, std::map<std::string, double>> by_country;
  for (const auto& r : flows.records)
    if (r.year == year && r.value > 0) by_country[r.country][r.product] += r.value;

  if (by_country.empty())
    throw std::runtime_error("no trade data for year " + std::to_string(year));

  std::map<std::string, double> country_total;
  std::map<std::string, double> product_total;
  double world_total = 0;
  for (const auto& [c, prods] : by_country)
    for (const auto& [p, v] : prods) {
      country_total[c] += v;
      product_total[p] += v;
      world_total += v;
    }

  RcaMatrix out;
  out.year = year;
  for (const auto& [c, total] : country_total) {
    if (total > 0) out.countries.push_back(c);
    else if (report) report->countries.push_back(c);
  }
  for (const auto& [p, total] : product_total) {
    if (total > 0) out.products.push_back(p);
    else if (report) report->products.push_back(p);
  }

  const Eigen::Index nc = static_cast<Eigen::Index>(out.countries.size());
  const Eigen::Index np = static_cast<Eigen::Index>(out.products.size());
  out.rca = Matrix::Zero(nc, np);
  for (Eigen::Index i = 0; i < nc; ++i) {
    const auto& prods = by_country.at(out.countries[i]);
    const double ct = country_total.at(out.countries[i]);
    for (Eigen::Index j = 0; j < np; ++j) {
      auto it = prods.find(out.products[j]);
      if (it == prods.end()) continue;
      const double world_share = product_total.at(out.products[j]) / world_total;
      out.rca(i, j) = (it->second / ct) / world_share;
    }
  }
  return out;
}

CountryProductMatrix binarize(const RcaMatrix& rca, double threshold,
                              DropReport* report) {
  if (threshold <= 0) throw std::invalid_argument("threshold must be > 0");

  Matrix b = (rca.rca.array() >= threshold).cast<double>();

  std::vector<Eigen::Index> rows, cols;
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    if (b.row(i).sum() > 0) rows.push_back(i);
    else if (report) report->countries.push_back(rca.countries[i]);
  }
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    if (b.col(j).sum() > 0) cols.push_back(j);
    else if (report) report->products.push_back(rca.products[j]);
  }
  if (rows.empty() || cols.empty())
    throw std::runtime_error("binarize: matrix is empty after thresholding");

  CountryProductMatrix out;
  out.year = rca.year;
  out.m.resize(static_cast<Eigen::Index>(rows.size()),
               static_cast<Eigen::Index>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    out.countries.push_back(rca.countries[rows[i]]);
    for (size_t j = 0; j < cols.size(); ++j)
      out.m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          b(rows[i], cols[j]);
  }
  for (Eigen::Index j : cols) out.products.push_back(rca.products[j]);
  return out;
}

std::map<std::string, int> diversification(const CountryProductMatrix& m) {
  std::map<std::string, int> out;
  for (Eigen::Index i = 0; i < m.m.rows(); ++i)
    out[m.countries[i]] = static_cast<int>(std::lround(m.m.row(i).sum()));
  return out;
}

CountryProductMatrix order_matrix(const CountryProductMatrix& m,
                                  const FitnessResult& fit) {
  std::string missing;
  for (const auto& c : m.countries)
    if (!fit.fitness.count(c)) missing += " " + c;
  for (const auto& p : m.products)
    if (!fit.complexity.count(p)) missing += " " + p;
  if (!missing.empty())
    throw std::runtime_error("order_matrix: fitness result missing keys:" + missing);

  std::vector<Eigen::Index> rows(m.countries.size()), cols(m.products.size());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::stable_sort(rows.begin(), rows.end(), [&](Eigen::Index a, Eigen::Index b) {
    return fit.fitness.at(m.countries[a]) > fit.fitness.at(m.countries[b]);
  });
  std::stable_sort(cols.begin(), cols.end(), [&](Eigen::Index a, Eigen::Index b) {
    return fit.complexity.at(m.products[a]) < fit.complexity.at(m.products[b]);
  });

  CountryProductMatrix out;
  out.year = m.year;
  out.m.resize(m.m.rows(), m.m.cols());
  for (size_t i = 0; i < rows.size(); ++i) {
    out.countries.push_back(m.countries[rows[i]]);
    for (size_t j = 0; j < cols.size(); ++j)
      out.m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m.m(rows[i], cols[j]);
  }
  for (Eigen::Index j : cols) out.products.push_back(m.products[j]);
  return out;
}

}  // namespace ecg
