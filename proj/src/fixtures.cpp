#include "endow/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "endow/document.hpp"
#include "endow/taxonomy.hpp"

#ifndef ENDOW_FIXTURE_DIR
#define ENDOW_FIXTURE_DIR "fixtures"
#endif

namespace endow {

namespace {

using S = Solution;
using M = ConsistencyMode;

std::vector<Fixture> build_registry() {
  return {
      {"ex1",
       "one agent owns both objects",
       {{"mu", "1=a"}, {"sigma", "1=a,2=b"}, {"delta", "1=a,3=b"}},
       std::nullopt,
       {{S::strong, M::full}, {S::refined_exclusion, M::full}}},
      {"ex2",
       "two co-owners of a single object",
       {{"mu", "1=a"}, {"sigma", "2=a"}, {"delta", "3=a"}, {"eta", ""}},
       std::nullopt,
       {{S::strong, M::full}, {S::refined_exclusion, M::full}}},
      {"ex3",
       "co-owned a, privately owned b",
       {{"mu", "1=a,2=b"}, {"sigma", "2=a,1=b"}, {"delta", "1=a,3=b"}},
       std::nullopt,
       {{S::strong, M::full}, {S::refined_exclusion, M::full}}},
      {"ex5", "mechanism walk-through", {{"sigma", "2=a,3=b,1=c,4=d"}}, "4,2,3,1", {}},
      {"ex6",
       "existing tenants with one public object",
       {{"mu", "1=a,3=b,2=c,4=d"}, {"sigma1", "4=a,1=b,3=c,2=d"}, {"sigma2", "1=a,3=b,4=c,2=d"}},
       std::nullopt,
       {{S::exclusion, M::strong_e0},
        {S::refined_exclusion, M::strong_e0},
        {S::yrmh, M::strong_e0},
        {S::strong, M::strong_e0}}},
      {"ex6-augmented",
       "public object handed to an agent who accepts nothing",
       {{"mu", "1=a,3=b,2=c,4=d"}, {"sigma1", "4=a,1=b,3=c,2=d"}, {"sigma2", "1=a,3=b,4=c,2=d"}},
       std::nullopt,
       {}},
      {"ex7",
       "reduced refined exclusion core gains an allocation",
       {{"mu", "1=a,3=b"}, {"sigma", "3=a,2=b"}, {"delta", "2=a,3=b"}},
       std::nullopt,
       {{S::refined_exclusion, M::strong_general}}},
      {"ex8",
       "reduced refined exclusion core keeps a blocked allocation",
       {{"mu", "1=a,2=b,3=c"}, {"sigma", "1=a,2=b,4=c"}},
       std::nullopt,
       {{S::refined_exclusion, M::strong_general}}},
      {"appendix-omega",
       "restricted control differs from control",
       {{"mu", "3=a,1=b,2=c"}, {"sigma", "2=a,1=b,3=c"}},
       std::nullopt,
       {}},
      {"appendix-yrmh",
       "refined exclusion core member the mechanism never finds",
       {{"mu", "1=a,2=b,4=c"}, {"sigma", "1=a,2=b,3=c"}},
       std::nullopt,
       {}},
      {"appendix-effective",
       "effective core is not consistent",
       {{"mu", "2=a,3=b,4=c"}, {"sigma", "1=a,3=b,4=c"}},
       std::nullopt,
       {{S::effective, M::full}, {S::effective, M::weak}, {S::rectified, M::full}}},
      {"prop1-housing", "three-agent housing market", {{"ttc", "1=a,2=c,3=b"}}, "1,2,3", {}},
      {"prop1-augmented",
       "housing market with a co-owner who accepts nothing",
       {{"ttc", "1=a,2=c,3=b"}},
       std::nullopt,
       {{S::exclusion, M::weak}, {S::strong, M::full}}},
      {"prop2-weakcore",
       "sole owner of three objects",
       {{"mu", "1=a"}},
       std::nullopt,
       {{S::weak, M::weak}, {S::strong, M::full}}},
  };
}

std::string describe(const Economy& economy, const Allocation& a,
                     const std::vector<std::pair<std::string, Allocation>>& named) {
  std::string out = format_allocation(economy, a);
  for (const auto& [name, b] : named) {
    if (a == b) out += "  " + name;
  }
  return out;
}

}  // namespace

const std::vector<Fixture>& fixture_registry() {
  static const std::vector<Fixture> registry = build_registry();
  return registry;
}

const Fixture* find_fixture(const std::string& id) {
  for (const auto& f : fixture_registry()) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

std::string default_fixture_dir() { return ENDOW_FIXTURE_DIR; }

std::string fixture_path(const std::string& dir, const std::string& id) { return dir + "/" + id + ".json"; }

std::string golden_path(const std::string& dir, const std::string& id) { return dir + "/golden/" + id + ".txt"; }

std::vector<std::pair<std::string, Allocation>> resolve_allocations(const Fixture& fixture, const Economy& economy) {
  std::vector<std::pair<std::string, Allocation>> out;
  for (const auto& [name, literal] : fixture.allocations) {
    out.emplace_back(name, literal.empty() ? Allocation::empty(economy.num_agents())
                                           : parse_allocation(economy, literal));
  }
  return out;
}

std::string fixture_report(const Fixture& fixture, const Economy& economy, const SearchLimits& limits) {
  std::ostringstream out;
  const auto named = resolve_allocations(fixture, economy);
  out << "fixture " << fixture.id << ": " << fixture.summary << '\n';
  out << "classes:";
  for (ClassLabel label : classify(economy)) out << ' ' << to_string(label);
  out << '\n';
  for (const auto& [name, a] : named) out << "allocation " << name << ' ' << format_allocation(economy, a) << '\n';

  const InclusionReport report = inclusion_report(BlockFinder(economy, limits));
  for (const auto& core : report.cores) {
    out << "core " << to_string(core.kind) << " (" << core.members.size() << ")\n";
    for (const auto& a : core.members) out << "  " << describe(economy, a, named) << '\n';
  }
  for (const auto& r : report.relations) {
    out << "relation " << to_string(r.left) << ' ' << to_string(r.relation) << ' ' << to_string(r.right) << '\n';
  }

  const auto outcomes = yrmh_all_outcomes(economy, limits);
  out << "yrmh (" << outcomes.size() << ")\n";
  for (const auto& a : outcomes) out << "  " << describe(economy, a, named) << '\n';
  if (fixture.yrmh_order) {
    out << render_trace(economy, yrmh_run(economy, parse_order(economy, *fixture.yrmh_order)).trace);
  }

  for (const auto& probe : fixture.probes) {
    const ConsistencyVerdict verdict = check_consistency(economy, probe.solution, probe.mode, limits);
    out << "consistency " << to_string(probe.solution) << ' ' << to_string(probe.mode) << ": "
        << (verdict.holds ? "holds" : "fails");
    if (verdict.counterexample) {
      const auto& c = *verdict.counterexample;
      out << ' ' << render_counterexample(economy, probe.mode, c);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace endow
