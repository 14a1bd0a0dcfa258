#ifndef ECG_RNG_HPP
#define ECG_RNG_HPP

#include <cmath>
#include <cstdint>

namespace ecg {

/// splitmix64 finalizer; decorrelates (seed, stream index) pairs.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Self-contained xorshift64 generator. Draw algorithms are spelled out
/// here so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix64(seed) | 1) {}

  /// Substream derived from (seed, index); independent of draw order in
  /// other substreams.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix64(seed) ^ mix64(index + 1));
  }

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  double uniform() {  // in [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double normal(double mean = 0.0, double sd = 1.0) {
    // Box-Muller; one value per call keeps streams simple to reason about.
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double z = std::sqrt(-2.0 * std::log(u1)) *
                     std::cos(2.0 * 3.14159265358979323846 * u2);
    return mean + sd * z;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ecg

#endif  // ECG_RNG_HPP
