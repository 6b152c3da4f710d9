#include "endow/cores.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace endow {

namespace {

constexpr std::array<std::pair<CoreConcept, std::string_view>, 7> kCoreNames{{
    {CoreConcept::weak, "weak"},
    {CoreConcept::strong, "strong"},
    {CoreConcept::exclusion, "exclusion"},
    {CoreConcept::refined_exclusion, "refined-exclusion"},
    {CoreConcept::effective, "effective"},
    {CoreConcept::rectified, "rectified"},
    {CoreConcept::pareto, "pareto"},
}};

std::optional<Allocation> first_missing(const std::vector<Allocation>& from, const std::vector<Allocation>& in) {
  for (const auto& a : from) {
    if (!std::binary_search(in.begin(), in.end(), a)) return a;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(CoreConcept kind) {
  for (const auto& [k, name] : kCoreNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<CoreConcept> parse_core_concept(std::string_view name) {
  for (const auto& [k, n] : kCoreNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::optional<BlockingConcept> defining_block(CoreConcept kind) {
  switch (kind) {
    case CoreConcept::weak: return BlockingConcept::strong;
    case CoreConcept::strong: return BlockingConcept::weak;
    case CoreConcept::exclusion: return BlockingConcept::exclusion;
    case CoreConcept::refined_exclusion: return BlockingConcept::weak_exclusion;
    case CoreConcept::effective: return BlockingConcept::effective;
    case CoreConcept::rectified: return BlockingConcept::rectification;
    case CoreConcept::pareto: return std::nullopt;
  }
  return std::nullopt;
}

bool CoreSet::contains(const Allocation& allocation) const {
  return std::binary_search(members.begin(), members.end(), allocation);
}

CoreSet compute_core(const BlockFinder& finder, CoreConcept kind, bool diagnostics) {
  CoreSet out{kind, {}, {}};
  const auto block = defining_block(kind);
  const AgentSet everyone = finder.economy().all_agents();
  for (const auto& mu : finder.allocations()) {
    std::optional<BlockingCertificate> witness;
    if (block) {
      witness = finder.find(mu, *block);
    } else if (auto better = finder.find_pareto_improvement(mu)) {
      witness = BlockingCertificate{BlockingConcept::weak, everyone, *better};
    }
    if (!witness) {
      out.members.push_back(mu);
    } else if (diagnostics) {
      out.excluded.push_back({mu, *witness});
    }
  }
  return out;
}

CoreSet compute_core(const Economy& economy, CoreConcept kind, bool diagnostics, const SearchLimits& limits) {
  return compute_core(BlockFinder(economy, limits), kind, diagnostics);
}

std::string_view to_string(SetRelation relation) {
  switch (relation) {
    case SetRelation::equal: return "=";
    case SetRelation::subset: return "subset";
    case SetRelation::superset: return "superset";
    case SetRelation::incomparable: return "incomparable";
  }
  return "?";
}

bool is_subset(const std::vector<Allocation>& small, const std::vector<Allocation>& large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

PairRelation compare_sets(CoreConcept left_kind, const std::vector<Allocation>& left, CoreConcept right_kind,
                          const std::vector<Allocation>& right) {
  PairRelation out{left_kind, right_kind, SetRelation::equal, first_missing(left, right), first_missing(right, left)};
  if (out.only_left && out.only_right) {
    out.relation = SetRelation::incomparable;
  } else if (out.only_left) {
    out.relation = SetRelation::superset;
  } else if (out.only_right) {
    out.relation = SetRelation::subset;
  }
  return out;
}

const CoreSet& InclusionReport::core(CoreConcept kind) const {
  for (const auto& c : cores) {
    if (c.kind == kind) return c;
  }
  throw std::out_of_range("core not in report");
}

const PairRelation& InclusionReport::relation(CoreConcept left, CoreConcept right) const {
  for (const auto& r : relations) {
    if (r.left == left && r.right == right) return r;
  }
  throw std::out_of_range("relation not in report");
}

InclusionReport inclusion_report(const BlockFinder& finder) {
  InclusionReport report;
  for (CoreConcept kind : kAllCoreConcepts) report.cores.push_back(compute_core(finder, kind));
  for (std::size_t i = 0; i < report.cores.size(); ++i) {
    for (std::size_t j = i + 1; j < report.cores.size(); ++j) {
      const auto& a = report.cores[i];
      const auto& b = report.cores[j];
      report.relations.push_back(compare_sets(a.kind, a.members, b.kind, b.members));
    }
  }
  return report;
}

InclusionReport inclusion_report(const Economy& economy, const SearchLimits& limits) {
  return inclusion_report(BlockFinder(economy, limits));
}

}  // namespace endow
