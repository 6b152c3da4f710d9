#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "endow/document.hpp"
#include "endow/fixtures.hpp"
#include "endow/generator.hpp"

namespace endow::testing {

inline Economy fixture_economy(const std::string& id) {
  return load_economy(fixture_path(default_fixture_dir(), id));
}

/// Allocation literal in the economy's labels, e.g. "1=a,2=b".
inline Allocation lit(const Economy& economy, const std::string& text) { return parse_allocation(economy, text); }

inline std::vector<Allocation> lits(const Economy& economy, const std::vector<std::string>& texts) {
  std::vector<Allocation> out;
  for (const auto& t : texts) out.push_back(lit(economy, t));
  std::sort(out.begin(), out.end());
  return out;
}

inline AgentSet agents(const Economy& economy, const std::string& labels) { return parse_agents(economy, labels); }

inline ObjectSet objects(const Economy& economy, const std::vector<std::string>& labels) {
  ObjectSet out;
  for (const auto& l : labels) out.insert(*economy.find_object(l));
  return out;
}

inline Economy random_economy(std::uint64_t seed, int n, int m, double density = 0.8) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.agents = n;
  spec.objects = m;
  spec.density = density;
  return generate(spec);
}

inline Economy class_economy(std::uint64_t seed, int n, int m, ClassLabel label, double density = 0.8) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.agents = n;
  spec.objects = m;
  spec.class_label = label;
  spec.density = density;
  return generate(spec);
}

// Same economy up to agent labels.
inline bool same_structure(const Economy& a, const Economy& b) {
  if (a.num_agents() != b.num_agents() || a.num_objects() != b.num_objects()) return false;
  for (int o = 0; o < a.num_objects(); ++o) {
    if (a.object_label(o) != b.object_label(o) || a.owners(o) != b.owners(o)) return false;
  }
  for (int i = 0; i < a.num_agents(); ++i) {
    if (a.preference(i).ranking != b.preference(i).ranking) return false;
  }
  return true;
}

}  // namespace endow::testing
