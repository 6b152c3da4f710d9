#include "endow/control.hpp"

#include "endow/error.hpp"

namespace endow {

ControlClosure control_closure(const Economy& economy, AgentSet seed, AgentSet never_add, const Allocation& mu) {
  AgentSet closure = seed;
  ObjectSet reach = economy.endowment_of(closure);
  // Each pass either adds an agent or terminates, so at most |I| passes.
  for (bool grew = true; grew;) {
    grew = false;
    AgentSet joining;
    const AgentSet candidates = economy.all_agents() - closure - never_add;
    candidates.for_each([&](int i) {
      if (mu[i].is_object() && reach.contains(mu[i].index())) joining.insert(i);
    });
    if (!joining.empty()) {
      closure |= joining;
      reach = economy.endowment_of(closure);
      grew = true;
    }
  }
  return {closure, reach};
}

ControlClosure controlled(const Economy& economy, AgentSet coalition, const Allocation& mu) {
  validate_allocation(economy, mu);
  validate_coalition(economy, coalition);
  return control_closure(economy, coalition, AgentSet{}, mu);
}

ControlClosure controlled_star(const Economy& economy, AgentSet subcoalition, AgentSet coalition,
                               const Allocation& mu) {
  validate_allocation(economy, mu);
  validate_coalition(economy, coalition);
  validate_coalition(economy, subcoalition);
  if (!subcoalition.subset_of(coalition) || subcoalition == coalition) {
    throw InputError("restricted control needs a proper subcoalition");
  }
  return control_closure(economy, subcoalition, coalition - subcoalition, mu);
}

}  // namespace endow
