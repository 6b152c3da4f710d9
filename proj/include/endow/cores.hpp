#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "endow/blocking.hpp"

namespace endow {

enum class CoreConcept { weak, strong, exclusion, refined_exclusion, effective, rectified, pareto };

inline constexpr CoreConcept kAllCoreConcepts[] = {
    CoreConcept::weak,      CoreConcept::strong,    CoreConcept::exclusion, CoreConcept::refined_exclusion,
    CoreConcept::effective, CoreConcept::rectified, CoreConcept::pareto,
};

std::string_view to_string(CoreConcept kind);
std::optional<CoreConcept> parse_core_concept(std::string_view name);

/// Blocking notion whose absence defines the core; none for `pareto`.
std::optional<BlockingConcept> defining_block(CoreConcept kind);

struct Exclusion {
  Allocation allocation;
  /// Blocking witness; for the Pareto set, a dominating allocation lives in
  /// `certificate->alternative` with the grand coalition.
  BlockingCertificate certificate;
};

struct CoreSet {
  CoreConcept kind;
  std::vector<Allocation> members;  ///< canonical order
  std::vector<Exclusion> excluded;  ///< filled only with diagnostics

  bool contains(const Allocation& allocation) const;
  bool operator==(const CoreSet& other) const { return kind == other.kind && members == other.members; }
};

CoreSet compute_core(const BlockFinder& finder, CoreConcept kind, bool diagnostics = false);
CoreSet compute_core(const Economy& economy, CoreConcept kind, bool diagnostics = false,
                     const SearchLimits& limits = SearchLimits::from_environment());

enum class SetRelation { equal, subset, superset, incomparable };
std::string_view to_string(SetRelation relation);

struct PairRelation {
  CoreConcept left;
  CoreConcept right;
  SetRelation relation;
  std::optional<Allocation> only_left;   ///< member of left missing from right
  std::optional<Allocation> only_right;  ///< member of right missing from left
};

struct InclusionReport {
  std::vector<CoreSet> cores;  ///< in `kAllCoreConcepts` order
  std::vector<PairRelation> relations;

  const CoreSet& core(CoreConcept kind) const;
  const PairRelation& relation(CoreConcept left, CoreConcept right) const;
};

InclusionReport inclusion_report(const BlockFinder& finder);
InclusionReport inclusion_report(const Economy& economy, const SearchLimits& limits = SearchLimits::from_environment());

/// Relation between two canonical-ordered allocation lists.
PairRelation compare_sets(CoreConcept left_kind, const std::vector<Allocation>& left, CoreConcept right_kind,
                          const std::vector<Allocation>& right);

bool is_subset(const std::vector<Allocation>& small, const std::vector<Allocation>& large);

}  // namespace endow
