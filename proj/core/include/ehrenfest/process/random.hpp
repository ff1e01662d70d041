#pragma once

#include <cstdint>
#include <random>

namespace ehrenfest::process {

/// Reproducible random source: std::mt19937_64 (bit-exact across conforming
/// standard libraries) with in-house uniform/exponential/normal transforms,
/// since the std:: distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for item `index` of a batch run under `seed`.
  static Rng derived(std::uint64_t seed, std::uint64_t index);

  /// Uniform on (0, 1): 53 random bits, never exactly 0 or 1.
  double uniform();
  /// Exponential with the given rate (> 0).
  double exponential(double rate);
  /// Standard normal via the Marsaglia polar method.
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer; used to derive stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace ehrenfest::process
