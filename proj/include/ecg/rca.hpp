#ifndef ECG_RCA_HPP
#define ECG_RCA_HPP

#include "ecg/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace ecg {

/// Countries/products removed while building or binarizing a matrix.
struct DropReport {
  std::vector<std::string> countries;
  std::vector<std::string> products;
  bool empty() const { return countries.empty() && products.empty(); }
};

/// Balassa index: within-country export share over world export share.
/// Countries and products with zero totals in the year are dropped and
/// reported. Throws std::runtime_error when the year has no trade data.
RcaMatrix compute_rca(const TradeFlows& flows, int year,
                      DropReport* report = nullptr);

/// m[c][p] = 1 iff rca[c][p] >= threshold (inclusive). All-zero rows and
/// columns are dropped and reported; an empty result throws.
CountryProductMatrix binarize(const RcaMatrix& rca, double threshold = 1.0,
                              DropReport* report = nullptr);

/// Number of products each country exports (row sums).
std::map<std::string, int> diversification(const CountryProductMatrix& m);

/// Permutes rows by descending fitness and columns by ascending
/// complexity, the ordering that exposes the triangular structure.
/// Throws when the fitness result does not cover the matrix index sets.
CountryProductMatrix order_matrix(const CountryProductMatrix& m,
                                  const FitnessResult& fit);

}  // namespace ecg

#endif  // ECG_RCA_HPP
