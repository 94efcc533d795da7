#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace lowdiam {

// splitmix64 finalizer; used to derive independent substream seeds so that
// attempt k of a run or trial t of an experiment never shares state with
// attempt k+1 / trial t+1.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + 0x517cc1b727220a95ULL));
}

// Seeded generator wrapping std::mt19937_64 (fully specified by the standard,
// so identical seeds give identical streams everywhere). Distribution sampling
// is done by hand: std::*_distribution output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in (0, 1]; never returns 0 so -log(u) is finite.
  double uniform01() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Inverse-CDF sample from Exp(rate): density rate*exp(-rate*x) for x >= 0.
  double exponential(double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("exponential: rate must be > 0");
    return -std::log(uniform01()) / rate;
  }

  // Uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace lowdiam
