#pragma once

#include "endow/economy.hpp"

namespace endow {

/// Result of extending a coalition through the agents occupying its
/// endowment, repeatedly, until nothing changes.
struct ControlClosure {
  AgentSet agents;
  ObjectSet objects;  ///< endowment of `agents`

  bool operator==(const ControlClosure&) const = default;
};

/// Closure kernel shared by both operators. Starting from `seed`, repeatedly
/// adds every agent outside the closure and outside `never_add` whose
/// assignment lies in the endowment of the closure. Agents are scanned in
/// ascending index order; the fixed point does not depend on that order.
ControlClosure control_closure(const Economy& economy, AgentSet seed, AgentSet never_add, const Allocation& mu);

/// Ω(C|ω,μ): objects controlled by `coalition` in `mu`.
ControlClosure controlled(const Economy& economy, AgentSet coalition, const Allocation& mu);

/// Ω*(C'|C,ω,μ): objects controlled by `subcoalition` when the extension may
/// not pass through members of `coalition` outside `subcoalition`.
/// Requires subcoalition ⊊ coalition, subcoalition nonempty.
ControlClosure controlled_star(const Economy& economy, AgentSet subcoalition, AgentSet coalition,
                               const Allocation& mu);

}  // namespace endow
