#pragma once

#include <cstdint>

namespace lipsync {

// Deterministic splitmix64 generator. We avoid std:: distributions because
// their output is implementation-defined; every sampled value here is a pure
// function of the seed, which the reproducibility tests rely on.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();

  // Uniform in [0, 1).
  double uniform();

  // Uniform integer in [0, n).
  int uniform_int(int n);

  // Standard normal via Box-Muller (two uniforms per draw, no caching).
  double normal();

  bool bernoulli(double p) { return uniform() < p; }

  // Derive an independent stream; used to decouple init / shuffle / dropout
  // orders so adding draws to one stream cannot shift another.
  Rng fork(uint64_t stream) const;

 private:
  uint64_t state_;
};

}  // namespace lipsync
