#pragma once

#include <cstdint>
#include <random>

namespace tvclust {

// Derives an independent stream seed from (base, index).  Used to give every
// replication / series / window its own generator, so results do not depend on
// the order in which work items are executed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Deterministic generator: mt19937_64 plus an explicit Box-Muller transform.
// std::normal_distribution is implementation-defined, so rolling the transform
// by hand keeps output identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on (0, 1] (never returns 0, so log() is always finite).
  double uniform();

  // Standard normal.
  double normal();

  double normal(double mean, double sd) { return mean + sd * normal(); }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tvclust
