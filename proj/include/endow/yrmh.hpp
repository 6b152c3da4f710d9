#pragma once

#include <string>
#include <vector>

#include "endow/economy.hpp"

namespace endow {

/// Agent indices, highest priority first.
struct PriorityOrder {
  std::vector<int> agents;

  bool operator==(const PriorityOrder&) const = default;
};

/// Throws `InputError` unless `order` is a permutation of the economy's agents.
void validate_order(const Economy& economy, const PriorityOrder& order);

enum class YrmhEventKind {
  repoint,  ///< object re-targeted after its agent left; agent -1 = nobody
  point,    ///< top agent points at her favorite remaining object (or null)
  promote,  ///< agent moved to the top of the working order
  cycle,    ///< agents in `pairs` receive the object they point to
  claim,    ///< agent takes an unclaimed object, or null
  share,    ///< `agents` acquire shared ownership of `object`
};

struct YrmhEvent {
  YrmhEventKind kind;
  int agent = -1;
  ObjectRef object;
  std::vector<std::pair<int, int>> pairs;  ///< (agent, object) along the cycle
  AgentSet agents;

  bool operator==(const YrmhEvent&) const = default;
};

struct YrmhStep {
  int number = 0;
  std::vector<YrmhEvent> events;

  bool operator==(const YrmhStep&) const = default;
};

struct YrmhTrace {
  PriorityOrder order;
  std::vector<YrmhStep> steps;

  bool operator==(const YrmhTrace&) const = default;
};

struct YrmhResult {
  Allocation allocation;
  YrmhTrace trace;
};

/// Runs the mechanism for one priority order. Throws `std::logic_error` if
/// the pointer graph ever holds more than one cycle.
YrmhResult yrmh_run(const Economy& economy, const PriorityOrder& order);

/// Rebuilds the allocation from the claim and cycle events of `trace`,
/// checking that no agent or object is assigned twice.
Allocation replay_trace(const Economy& economy, const YrmhTrace& trace);

/// One line per step, labels from `economy`.
std::string render_trace(const Economy& economy, const YrmhTrace& trace);

/// Distinct outcomes over every priority order, canonical order.
std::vector<Allocation> yrmh_all_outcomes(const Economy& economy,
                                          const SearchLimits& limits = SearchLimits::from_environment());

}  // namespace endow
