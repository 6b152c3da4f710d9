#include "endow/reduction.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "endow/error.hpp"
#include "endow/taxonomy.hpp"

namespace endow {

namespace {

constexpr std::array<std::pair<ConsistencyMode, std::string_view>, 4> kModeNames{{
    {ConsistencyMode::full, "full"},
    {ConsistencyMode::weak, "weak"},
    {ConsistencyMode::strong_general, "strong"},
    {ConsistencyMode::strong_e0, "strong-e0"},
}};

std::vector<AgentSet> removable_groups(const Economy& economy, const Allocation& mu, ConsistencyMode mode) {
  if (mode == ConsistencyMode::weak) return minimal_self_enforcing(economy, mu);
  std::vector<AgentSet> out;
  const AgentSet everyone = economy.all_agents();
  everyone.for_each_nonempty_subset([&](AgentSet c) {
    if (c != everyone && mu.objects_of(c).subset_of(economy.endowment_of(c))) out.push_back(c);
    return false;
  });
  return out;
}

bool contains(const std::vector<Allocation>& sorted, const Allocation& a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

}  // namespace

std::string_view to_string(Solution solution) {
  if (solution == Solution::yrmh) return "yrmh";
  return to_string(*as_core(solution));
}

std::optional<Solution> parse_solution(std::string_view name) {
  if (name == "yrmh") return Solution::yrmh;
  if (auto core = parse_core_concept(name)) return from_core(*core);
  return std::nullopt;
}

std::optional<CoreConcept> as_core(Solution solution) {
  switch (solution) {
    case Solution::weak: return CoreConcept::weak;
    case Solution::strong: return CoreConcept::strong;
    case Solution::exclusion: return CoreConcept::exclusion;
    case Solution::refined_exclusion: return CoreConcept::refined_exclusion;
    case Solution::effective: return CoreConcept::effective;
    case Solution::rectified: return CoreConcept::rectified;
    case Solution::pareto: return CoreConcept::pareto;
    case Solution::yrmh: return std::nullopt;
  }
  return std::nullopt;
}

Solution from_core(CoreConcept kind) {
  switch (kind) {
    case CoreConcept::weak: return Solution::weak;
    case CoreConcept::strong: return Solution::strong;
    case CoreConcept::exclusion: return Solution::exclusion;
    case CoreConcept::refined_exclusion: return Solution::refined_exclusion;
    case CoreConcept::effective: return Solution::effective;
    case CoreConcept::rectified: return Solution::rectified;
    case CoreConcept::pareto: return Solution::pareto;
  }
  return Solution::pareto;
}

std::vector<Allocation> solve(const Economy& economy, Solution solution, const SearchLimits& limits) {
  if (auto core = as_core(solution)) return compute_core(economy, *core, false, limits).members;
  return yrmh_all_outcomes(economy, limits);
}

ReducedEconomy reduce(const Economy& economy, const Allocation& mu, AgentSet removed) {
  validate_allocation(economy, mu);
  validate_coalition(economy, removed);
  if (removed == economy.all_agents()) throw InputError("cannot remove every agent");
  if (!is_self_enforcing(economy, removed, mu)) {
    throw InputError("removed agents are not self-enforcing in the allocation");
  }
  const int n = economy.num_agents();
  const int m = economy.num_objects();
  const ObjectSet gone = mu.objects_of(removed);

  std::vector<int> agent_map(static_cast<std::size_t>(n), -1);
  std::vector<int> object_map(static_cast<std::size_t>(m), -1);
  std::vector<int> agent_origin;
  std::vector<int> object_origin;
  std::vector<std::string> agent_labels;
  std::vector<std::string> object_labels;
  for (int i = 0; i < n; ++i) {
    if (removed.contains(i)) continue;
    agent_map[static_cast<std::size_t>(i)] = static_cast<int>(agent_origin.size());
    agent_origin.push_back(i);
    agent_labels.push_back(economy.agent_label(i));
  }
  for (int o = 0; o < m; ++o) {
    if (gone.contains(o)) continue;
    object_map[static_cast<std::size_t>(o)] = static_cast<int>(object_origin.size());
    object_origin.push_back(o);
    object_labels.push_back(economy.object_label(o));
  }

  const AgentSet everyone_left = AgentSet::range(static_cast<int>(agent_origin.size()));
  OwnershipMap owners;
  for (int o : object_origin) {
    AgentSet c;
    (economy.owners(o) - removed).for_each([&](int i) { c.insert(agent_map[static_cast<std::size_t>(i)]); });
    owners.push_back(c.empty() ? everyone_left : c);
  }
  std::vector<Preference> preferences;
  for (int i : agent_origin) {
    Preference p;
    for (int o : economy.preference(i).ranking) {
      if (object_map[static_cast<std::size_t>(o)] >= 0) p.ranking.push_back(object_map[static_cast<std::size_t>(o)]);
    }
    preferences.push_back(std::move(p));
  }

  return ReducedEconomy{Economy(std::move(agent_labels), std::move(object_labels), std::move(preferences),
                                std::move(owners)),
                        std::move(agent_map),
                        std::move(object_map),
                        std::move(agent_origin),
                        std::move(object_origin),
                        removed,
                        mu};
}

Allocation restrict_allocation(const ReducedEconomy& reduced, const Allocation& mu) {
  if (mu.size() != static_cast<int>(reduced.agent_map.size())) {
    throw InputError("allocation does not match the original economy");
  }
  Allocation out = Allocation::empty(reduced.economy.num_agents());
  for (std::size_t k = 0; k < reduced.agent_origin.size(); ++k) {
    const ObjectRef x = mu[reduced.agent_origin[k]];
    if (x.is_null()) continue;
    const int mapped = reduced.object_map[static_cast<std::size_t>(x.index())];
    if (mapped < 0) throw InputError("allocation gives a remaining agent a removed object");
    out.assign(static_cast<int>(k), ObjectRef::object(mapped));
  }
  return out;
}

Allocation extend_allocation(const ReducedEconomy& reduced, const Allocation& mu_reduced) {
  validate_allocation(reduced.economy, mu_reduced);
  Allocation out = reduced.mu;
  for (std::size_t k = 0; k < reduced.agent_origin.size(); ++k) {
    const ObjectRef x = mu_reduced[static_cast<int>(k)];
    out.assign(reduced.agent_origin[k],
               x.is_null() ? x : ObjectRef::object(reduced.object_origin[static_cast<std::size_t>(x.index())]));
  }
  return out;
}

std::string_view to_string(ConsistencyMode mode) {
  for (const auto& [m, name] : kModeNames) {
    if (m == mode) return name;
  }
  return "?";
}

std::optional<ConsistencyMode> parse_consistency_mode(std::string_view name) {
  for (const auto& [m, n] : kModeNames) {
    if (n == name) return m;
  }
  return std::nullopt;
}

ConsistencyVerdict check_consistency(const Economy& economy, Solution solution, ConsistencyMode mode,
                                     const SearchLimits& limits) {
  if (mode == ConsistencyMode::strong_general) return check_strong_consistency_general(economy, solution, limits);
  if (mode == ConsistencyMode::strong_e0) return check_strong_consistency_e0(economy, solution, limits);
  ConsistencyVerdict verdict{mode, true, std::nullopt};
  for (const auto& mu : solve(economy, solution, limits)) {
    for (AgentSet removed : removable_groups(economy, mu, mode)) {
      const ReducedEconomy reduced = reduce(economy, mu, removed);
      const Allocation restricted = restrict_allocation(reduced, mu);
      if (!contains(solve(reduced.economy, solution, limits), restricted)) {
        verdict.holds = false;
        verdict.counterexample = Counterexample{mu, removed, restricted, false};
        return verdict;
      }
    }
  }
  return verdict;
}

std::optional<Counterexample> probe_strong_consistency(const Economy& economy, Solution solution,
                                                       const std::vector<Allocation>& solution_set,
                                                       const Allocation& mu, AgentSet removed,
                                                       const SearchLimits& limits) {
  const ReducedEconomy reduced = reduce(economy, mu, removed);
  std::vector<Allocation> predicted;
  for (const auto& delta : solution_set) {
    bool agrees = true;
    removed.for_each([&](int i) { agrees = agrees && delta[i] == mu[i]; });
    if (agrees) predicted.push_back(restrict_allocation(reduced, delta));
  }
  std::sort(predicted.begin(), predicted.end());
  const std::vector<Allocation> actual = solve(reduced.economy, solution, limits);
  for (const auto& a : actual) {
    if (!contains(predicted, a)) return Counterexample{mu, removed, a, true};
  }
  for (const auto& p : predicted) {
    if (!contains(actual, p)) return Counterexample{mu, removed, p, false};
  }
  return std::nullopt;
}

ConsistencyVerdict check_strong_consistency_general(const Economy& economy, Solution solution,
                                                    const SearchLimits& limits) {
  ConsistencyVerdict verdict{ConsistencyMode::strong_general, true, std::nullopt};
  const std::vector<Allocation> chosen = solve(economy, solution, limits);
  for (const auto& mu : chosen) {
    for (AgentSet removed : removable_groups(economy, mu, ConsistencyMode::full)) {
      if (auto failure = probe_strong_consistency(economy, solution, chosen, mu, removed, limits)) {
        verdict.holds = false;
        verdict.counterexample = std::move(failure);
        return verdict;
      }
    }
  }
  return verdict;
}

ConsistencyVerdict check_strong_consistency_e0(const Economy& economy, Solution solution,
                                               const SearchLimits& limits) {
  const Economy augmented = augment_private_public(economy);
  ConsistencyVerdict verdict{ConsistencyMode::strong_e0, true, std::nullopt};

  std::vector<Allocation> restricted;
  for (const auto& mu : solve(augmented, solution, limits)) {
    restricted.emplace_back(std::vector<ObjectRef>(mu.assignment().begin(), mu.assignment().end() - 1));
  }
  const std::vector<Allocation> direct = solve(economy, solution, limits);
  for (std::size_t k = 0; k < restricted.size(); ++k) {
    if (!contains(direct, restricted[k])) {
      verdict.holds = false;
      verdict.counterexample = Counterexample{restricted[k], AgentSet{}, restricted[k], true};
      return verdict;
    }
  }
  std::sort(restricted.begin(), restricted.end());
  for (const auto& a : direct) {
    if (!contains(restricted, a)) {
      verdict.holds = false;
      verdict.counterexample = Counterexample{a, AgentSet{}, a, false};
      return verdict;
    }
  }
  return verdict;
}

}  // namespace endow
