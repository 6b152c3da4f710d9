#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "endow/cores.hpp"
#include "endow/yrmh.hpp"

namespace endow {

/// Anything that maps an economy to a set of allocations: one of the cores,
/// or the outcomes of the mechanism over all orders.
enum class Solution { weak, strong, exclusion, refined_exclusion, effective, rectified, pareto, yrmh };

std::string_view to_string(Solution solution);
std::optional<Solution> parse_solution(std::string_view name);
std::optional<CoreConcept> as_core(Solution solution);
Solution from_core(CoreConcept kind);

/// f(economy) in canonical order.
std::vector<Allocation> solve(const Economy& economy, Solution solution,
                              const SearchLimits& limits = SearchLimits::from_environment());

/// Γ(μ, I∖I′) together with the index maps back to the original.
struct ReducedEconomy {
  Economy economy;
  std::vector<int> agent_map;   ///< original agent -> reduced index, -1 if removed
  std::vector<int> object_map;  ///< original object -> reduced index, -1 if removed
  std::vector<int> agent_origin;   ///< reduced agent -> original index
  std::vector<int> object_origin;  ///< reduced object -> original index
  AgentSet removed;
  Allocation mu;  ///< allocation the removed agents left with
};

/// `removed` must be a nonempty proper subset that is self-enforcing in `mu`.
ReducedEconomy reduce(const Economy& economy, const Allocation& mu, AgentSet removed);

/// μ restricted to the remaining agents, indexed for the reduced economy.
Allocation restrict_allocation(const ReducedEconomy& reduced, const Allocation& mu);

/// μ′ ⊕ μ_{I′}: reduced allocation on the remaining agents plus the removed
/// agents' assignments from `reduced.mu`.
Allocation extend_allocation(const ReducedEconomy& reduced, const Allocation& mu_reduced);

enum class ConsistencyMode { full, weak, strong_general, strong_e0 };
std::string_view to_string(ConsistencyMode mode);
std::optional<ConsistencyMode> parse_consistency_mode(std::string_view name);

/// For the reduction modes, `witness` lives in Γ(mu, I∖removed). For
/// strong_e0, `removed` is empty and `mu` = `witness` is an allocation of Γ
/// found on one side only.
struct Counterexample {
  Allocation mu;  ///< member of f(Γ) whose reduction fails
  AgentSet removed;
  Allocation witness;
  /// True when `witness` is in the recomputed set (f of the reduced economy,
  /// or the restrictions of f(Γ*)) but not in the predicted one.
  bool extra = false;
};

struct ConsistencyVerdict {
  ConsistencyMode mode;
  bool holds = true;
  std::optional<Counterexample> counterexample;
};

/// Consistency (`full`) or weak consistency (`weak`) on one economy.
ConsistencyVerdict check_consistency(const Economy& economy, Solution solution, ConsistencyMode mode,
                                     const SearchLimits& limits = SearchLimits::from_environment());

/// Evaluates one (μ, I′) pair of the strong (general) condition: the reduced
/// solution must equal the restrictions of members of f(Γ) agreeing with μ on I′.
std::optional<Counterexample> probe_strong_consistency(const Economy& economy, Solution solution,
                                                       const std::vector<Allocation>& solution_set,
                                                       const Allocation& mu, AgentSet removed,
                                                       const SearchLimits& limits = SearchLimits::from_environment());

ConsistencyVerdict check_strong_consistency_general(const Economy& economy, Solution solution,
                                                    const SearchLimits& limits = SearchLimits::from_environment());

/// f(Γ) = {μ^R : μ ∈ f(Γ*)} for a private-public-ownership economy.
ConsistencyVerdict check_strong_consistency_e0(const Economy& economy, Solution solution,
                                               const SearchLimits& limits = SearchLimits::from_environment());

}  // namespace endow
