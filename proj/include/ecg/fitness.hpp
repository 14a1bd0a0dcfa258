#ifndef ECG_FITNESS_HPP
#define ECG_FITNESS_HPP

#include "ecg/types.hpp"

#include <map>
#include <string>

namespace ecg {

/// Fitness components below this value are clamped inside the reciprocal
/// sum of the complexity update.
inline constexpr double kFitnessFloor = 1e-12;

struct FitnessStep {
  Vector F;
  Vector Q;
  bool floor_hit = false;
};

/// One iteration of the nonlinear fitness/complexity map on a binary
/// country-product matrix. The fitness intermediate is the
/// complexity-weighted diversification; the complexity intermediate is the
/// harmonic penalty over the exporters' fitness, evaluated on the
/// just-updated fitness. Both outputs are normalized to mean 1.
FitnessStep fitness_step(const Matrix& m, const Vector& F, const Vector& Q);

/// Iterates fitness_step from the all-ones start until the ranking is
/// stable for 10 iterations and above-floor components move less than tol
/// (relative), or until max_iter. An exact fixed point converges
/// immediately. Exhausting max_iter is not an error; converged is false.
FitnessResult iterate_fitness(const CountryProductMatrix& m,
                              int max_iter = 1000, double tol = 1e-8);

/// Competition ranks, 1 = highest fitness; ties share the smaller rank
/// and subsequent ranks skip.
std::map<std::string, int> rank_of(const FitnessResult& fit);

}  // namespace ecg

#endif  // ECG_FITNESS_HPP
