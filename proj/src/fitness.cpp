#include "ecg/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ecg {

namespace {

// Sum of non-negative addends in ascending order. The canonical order
// makes every downstream result invariant under row/column permutations
// of the input matrix, bit for bit.
double sorted_sum(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  double s = 0;
  for (double x : v) s += x;
  return s;
}

Vector normalize_mean_one(const Vector& v) {
  // a uniform vector normalizes to exactly ones; skipping the division
  // avoids rounding the sum of n equal addends
  if (v.maxCoeff() == v.minCoeff()) return Vector::Ones(v.size());
  std::vector<double> entries(v.data(), v.data() + v.size());
  const double mean = sorted_sum(entries) / static_cast<double>(v.size());
  return v / mean;
}

}  // namespace

FitnessStep fitness_step(const Matrix& m, const Vector& /*F*/, const Vector& Q) {
  FitnessStep out;

  std::vector<double> addends;
  Vector f_tilde(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    addends.clear();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) addends.push_back(Q(j));
    f_tilde(i) = sorted_sum(addends);
  }
  out.F = normalize_mean_one(f_tilde);

  Vector f_recip(out.F.size());
  for (Eigen::Index i = 0; i < out.F.size(); ++i) {
    double fi = out.F(i);
    if (fi < kFitnessFloor) {
      fi = kFitnessFloor;
      out.floor_hit = true;
    }
    f_recip(i) = 1.0 / fi;
  }
  Vector q_tilde(m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    addends.clear();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) addends.push_back(f_recip(i));
    q_tilde(j) = 1.0 / sorted_sum(addends);
  }
  out.Q = normalize_mean_one(q_tilde);
  return out;
}

namespace {

// Ranking as a sorted order of row indices; ties compare equal, so two
// rankings differ only when some strict order flips.
std::vector<int> ranking_of(const Vector& F) {
  std::vector<int> rank(F.size());
  std::vector<int> order(F.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return F(a) > F(b); });
  int r = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && F(order[i]) < F(order[i - 1])) r = static_cast<int>(i);
    rank[order[i]] = r;
  }
  return rank;
}

}  // namespace

FitnessResult iterate_fitness(const CountryProductMatrix& m, int max_iter,
                              double tol) {
  if (m.m.rows() == 0 || m.m.cols() == 0)
    throw std::runtime_error("iterate_fitness: empty matrix");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (tol <= 0) throw std::invalid_argument("tol must be > 0");

  const int rank_window = 10;

  Vector F = Vector::Ones(m.m.rows());
  Vector Q = Vector::Ones(m.m.cols());
  std::vector<int> ranking = ranking_of(F);

  FitnessResult out;
  out.year = m.year;
  out.rank_stable_at = 0;

  int n = 0;
  bool converged = false;
  while (n < max_iter) {
    ++n;
    FitnessStep step = fitness_step(m.m, F, Q);
    out.floor_hit = out.floor_hit || step.floor_hit;

    std::vector<int> new_ranking = ranking_of(step.F);
    if (new_ranking != ranking) out.rank_stable_at = n;
    ranking = std::move(new_ranking);

    double max_abs = 0, max_rel = 0;
    auto track = [&](const Vector& prev, const Vector& next) {
      for (Eigen::Index i = 0; i < prev.size(); ++i) {
        const double d = std::abs(next(i) - prev(i));
        max_abs = std::max(max_abs, d);
        if (prev(i) > kFitnessFloor) max_rel = std::max(max_rel, d / prev(i));
      }
    };
    track(F, step.F);
    track(Q, step.Q);

    F = std::move(step.F);
    Q = std::move(step.Q);

    if (max_abs == 0.0) {  // exact fixed point
      converged = true;
      break;
    }
    if (max_rel < tol && n - out.rank_stable_at >= rank_window) {
      converged = true;
      break;
    }
  }

  out.iterations = n;
  out.converged = converged;
  for (Eigen::Index i = 0; i < F.size(); ++i) out.fitness[m.countries[i]] = F(i);
  for (Eigen::Index j = 0; j < Q.size(); ++j) out.complexity[m.products[j]] = Q(j);
  return out;
}

std::map<std::string, int> rank_of(const FitnessResult& fit) {
  std::vector<std::pair<std::string, double>> items(fit.fitness.begin(),
                                                    fit.fitness.end());
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::map<std::string, int> out;
  int rank = 1;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0 && items[i].second < items[i - 1].second)
      rank = static_cast<int>(i) + 1;
    out[items[i].first] = rank;
  }
  return out;
}

}  // namespace ecg
