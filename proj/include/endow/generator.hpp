#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "endow/economy.hpp"
#include "endow/taxonomy.hpp"

namespace endow {

struct GeneratorSpec {
  std::uint64_t seed = 0;
  int agents = 3;
  int objects = 3;
  std::optional<ClassLabel> class_label;
  /// Probability that an agent finds a given object acceptable. Ignored by
  /// classes that require every object to be acceptable.
  double density = 1.0;
};

/// Deterministic for a fixed spec on every platform. Agents are labeled
/// 1..n and objects a, b, ... (i* for the added agent of an augmented
/// housing market). Throws `InputError` for infeasible or out-of-bound specs.
Economy generate(const GeneratorSpec& spec, const SearchLimits& limits = SearchLimits::from_environment());

/// Seeded source with a platform-independent stream. Standard distributions
/// are implementation-defined, so draws are derived from raw engine output.
class SeededRandom {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1).
  double unit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace endow
