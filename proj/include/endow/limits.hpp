#pragma once

namespace endow {

/// Size bounds for the exhaustive searches. `CORE_SOLVE_MAX_AGENTS` in the
/// environment overrides `max_agents`.
struct SearchLimits {
  int max_agents = 8;
  int max_objects = 7;
  /// Bound for searches that run every priority order (|I|! runs).
  int max_order_agents = 7;

  static SearchLimits from_environment();
};

}  // namespace endow
