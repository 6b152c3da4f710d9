#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "endow/economy.hpp"

namespace endow {

/// The six ways a coalition can object to an allocation.
enum class BlockingConcept {
  weak,            ///< weak improvement, own endowment (defines the strong core)
  strong,          ///< strict improvement, own endowment (defines the weak core)
  exclusion,       ///< strict improvement, harm only occupants of controlled objects
  weak_exclusion,  ///< exclusion blocking with restricted unaffected members
  effective,       ///< weak blocking without handing out redundant endowments
  rectification,   ///< effective blocking relaxed to objects held inside C
};

std::string_view to_string(BlockingConcept kind);
std::optional<BlockingConcept> parse_blocking_concept(std::string_view name);

/// Witness that `coalition` blocks some allocation via `alternative`.
struct BlockingCertificate {
  BlockingConcept kind;
  AgentSet coalition;
  Allocation alternative;

  bool operator==(const BlockingCertificate&) const = default;
};

/// How the members of a coalition fare when moving from μ to σ.
struct EffectPartition {
  AgentSet better;      ///< C_{σ>μ}
  AgentSet unaffected;  ///< C_{σ=μ}
  AgentSet worse;

  bool operator==(const EffectPartition&) const = default;
};

EffectPartition partition_by_effect(const Economy& economy, AgentSet coalition, const Allocation& sigma,
                                    const Allocation& mu);

// Direct evaluations of the defining clauses. Every predicate returns false
// when sigma == mu. The subset quantifiers are evaluated literally, so these
// are the reference against which the search kernel is tested.
bool weakly_blocks(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu);
bool strongly_blocks(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu);
bool exclusion_blocks(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu);
bool weakly_exclusion_blocks(const Economy& economy, AgentSet coalition, const Allocation& sigma,
                             const Allocation& mu);
bool effectively_blocks(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu);
bool rectification_blocks(const Economy& economy, AgentSet coalition, const Allocation& sigma,
                          const Allocation& mu);

bool blocks(const Economy& economy, BlockingConcept kind, AgentSet coalition, const Allocation& sigma,
            const Allocation& mu);

/// Re-evaluates the certificate's predicate against `mu`.
bool verify_certificate(const Economy& economy, const Allocation& mu, const BlockingCertificate& certificate);

/// Exhaustive block search over one economy. Holds the enumerated
/// allocations so repeated queries (one per candidate allocation when
/// computing a core) do not re-enumerate.
class BlockFinder {
 public:
  explicit BlockFinder(const Economy& economy, const SearchLimits& limits = SearchLimits::from_environment());

  const Economy& economy() const { return economy_; }
  /// Every allocation of the economy in canonical order.
  const std::vector<Allocation>& allocations() const { return allocations_; }

  /// First certificate in canonical order: alternatives in enumeration
  /// order, then coalitions in ascending bitset order.
  std::optional<BlockingCertificate> find(const Allocation& mu, BlockingConcept kind) const;

  /// Exclusion blocking tested only with the coalition of all strict
  /// improvers, per alternative. Agrees with `find(mu, exclusion)` on
  /// existence.
  std::optional<BlockingCertificate> find_exclusion_by_improvers(const Allocation& mu) const;

  /// An allocation that Pareto dominates `mu`, if any.
  std::optional<Allocation> find_pareto_improvement(const Allocation& mu) const;

 private:
  Economy economy_;
  std::vector<Allocation> allocations_;
  std::vector<int> ranks_;         // [allocation * n + agent]
  std::vector<AgentSet> needs_;    // owners of the object held, [allocation * n + agent]
};

std::optional<BlockingCertificate> find_block(const Economy& economy, const Allocation& mu, BlockingConcept kind,
                                              const SearchLimits& limits = SearchLimits::from_environment());

}  // namespace endow
