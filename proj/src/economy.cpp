#include "endow/economy.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "endow/error.hpp"

namespace endow {

SearchLimits SearchLimits::from_environment() {
  SearchLimits limits;
  if (const char* value = std::getenv("CORE_SOLVE_MAX_AGENTS"); value != nullptr && *value != '\0') {
    char* end = nullptr;
    const long parsed = std::strtol(value, &end, 10);
    if (end != nullptr && *end == '\0' && parsed > 0 && parsed <= Economy::kMaxAgents) {
      limits.max_agents = static_cast<int>(parsed);
    }
  }
  return limits;
}

namespace {

void check_unique(const std::vector<std::string>& labels, const char* kind) {
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw InputError(std::string("empty ") + kind + " label");
    if (!seen.insert(label).second) throw InputError(std::string("duplicate ") + kind + " label '" + label + "'");
  }
}

}  // namespace

Economy::Economy(std::vector<std::string> agent_labels, std::vector<std::string> object_labels,
                 std::vector<Preference> preferences, OwnershipMap owners)
    : agent_labels_(std::move(agent_labels)),
      object_labels_(std::move(object_labels)),
      preferences_(std::move(preferences)),
      owners_(std::move(owners)) {
  const int n = num_agents();
  const int m = num_objects();
  if (n < 1) throw InputError("an economy needs at least one agent");
  if (n > kMaxAgents) throw InputError("too many agents (at most " + std::to_string(kMaxAgents) + ")");
  if (m > kMaxObjects) throw InputError("too many objects (at most " + std::to_string(kMaxObjects) + ")");
  check_unique(agent_labels_, "agent");
  check_unique(object_labels_, "object");
  if (std::find(object_labels_.begin(), object_labels_.end(), "null") != object_labels_.end()) {
    throw InputError("'null' is reserved for the null object");
  }
  if (static_cast<int>(preferences_.size()) != n) throw InputError("one preference list per agent required");
  if (static_cast<int>(owners_.size()) != m) throw InputError("one owner set per object required");
  for (int o = 0; o < m; ++o) {
    if (owners_[static_cast<std::size_t>(o)].empty()) {
      throw InputError("object '" + object_labels_[static_cast<std::size_t>(o)] + "' has no owner");
    }
    if (!owners_[static_cast<std::size_t>(o)].subset_of(all_agents())) {
      throw InputError("object '" + object_labels_[static_cast<std::size_t>(o)] + "' has an unknown owner");
    }
  }

  rank_.assign(static_cast<std::size_t>(n * (m + 1)), 0);
  for (int i = 0; i < n; ++i) {
    const auto& ranking = preferences_[static_cast<std::size_t>(i)].ranking;
    std::vector<bool> listed(static_cast<std::size_t>(m), false);
    for (int o : ranking) {
      if (o < 0 || o >= m) throw InputError("agent '" + agent_label(i) + "' ranks an unknown object");
      if (listed[static_cast<std::size_t>(o)]) {
        throw InputError("agent '" + agent_label(i) + "' ranks object '" + object_label(o) + "' twice");
      }
      listed[static_cast<std::size_t>(o)] = true;
    }
    int* row = &rank_[static_cast<std::size_t>(i * (m + 1))];
    int position = 0;
    for (int o : ranking) row[o] = position++;
    row[m] = position++;
    for (int o = 0; o < m; ++o) {
      if (!listed[static_cast<std::size_t>(o)]) row[o] = position++;
    }
  }
}

std::optional<int> Economy::find_agent(const std::string& label) const {
  const auto it = std::find(agent_labels_.begin(), agent_labels_.end(), label);
  if (it == agent_labels_.end()) return std::nullopt;
  return static_cast<int>(it - agent_labels_.begin());
}

std::optional<int> Economy::find_object(const std::string& label) const {
  const auto it = std::find(object_labels_.begin(), object_labels_.end(), label);
  if (it == object_labels_.end()) return std::nullopt;
  return static_cast<int>(it - object_labels_.begin());
}

ObjectRef Economy::favorite(int i, ObjectSet available) const {
  for (int o : preference(i).ranking) {
    if (available.contains(o)) return ObjectRef::object(o);
  }
  return ObjectRef::null();
}

ObjectSet Economy::endowment_of(AgentSet coalition) const {
  ObjectSet out;
  for (int o = 0; o < num_objects(); ++o) {
    if (owners_[static_cast<std::size_t>(o)].subset_of(coalition)) out.insert(o);
  }
  return out;
}

bool Economy::operator==(const Economy& other) const {
  if (agent_labels_ != other.agent_labels_ || object_labels_ != other.object_labels_ || owners_ != other.owners_) {
    return false;
  }
  for (int i = 0; i < num_agents(); ++i) {
    if (preference(i).ranking != other.preference(i).ranking) return false;
  }
  return true;
}

ObjectSet Allocation::objects_of(AgentSet coalition) const {
  ObjectSet out;
  coalition.for_each([&](int i) {
    if (i < size() && (*this)[i].is_object()) out.insert((*this)[i].index());
  });
  return out;
}

int Allocation::holder(int o) const {
  for (int i = 0; i < size(); ++i) {
    if ((*this)[i].is_object() && (*this)[i].index() == o) return i;
  }
  return -1;
}

void validate_allocation(const Economy& economy, const Allocation& allocation) {
  if (allocation.size() != economy.num_agents()) {
    throw InputError("allocation has " + std::to_string(allocation.size()) + " entries for " +
                     std::to_string(economy.num_agents()) + " agents");
  }
  ObjectSet used;
  for (int i = 0; i < allocation.size(); ++i) {
    const ObjectRef x = allocation[i];
    if (x.is_null()) continue;
    if (x.index() >= economy.num_objects()) throw InputError("allocation names an unknown object");
    if (used.contains(x.index())) {
      throw InputError("object '" + economy.object_label(x.index()) + "' assigned to more than one agent");
    }
    used.insert(x.index());
  }
}

void validate_coalition(const Economy& economy, AgentSet coalition) {
  if (coalition.empty()) throw InputError("a coalition must be nonempty");
  if (!coalition.subset_of(economy.all_agents())) throw InputError("coalition names an unknown agent");
}

ObjectSet endowment(const Economy& economy, AgentSet coalition) {
  validate_coalition(economy, coalition);
  return economy.endowment_of(coalition);
}

bool is_self_enforcing(const Economy& economy, AgentSet coalition, const Allocation& allocation) {
  validate_allocation(economy, allocation);
  validate_coalition(economy, coalition);
  return allocation.objects_of(coalition).subset_of(economy.endowment_of(coalition));
}

std::vector<AgentSet> minimal_self_enforcing(const Economy& economy, const Allocation& allocation) {
  validate_allocation(economy, allocation);
  const AgentSet everyone = economy.all_agents();
  std::vector<AgentSet> self_enforcing;
  everyone.for_each_nonempty_subset([&](AgentSet c) {
    if (c != everyone && allocation.objects_of(c).subset_of(economy.endowment_of(c))) self_enforcing.push_back(c);
    return false;
  });
  std::vector<AgentSet> minimal;
  for (AgentSet c : self_enforcing) {
    const bool has_smaller = std::any_of(self_enforcing.begin(), self_enforcing.end(),
                                         [&](AgentSet d) { return d != c && d.subset_of(c); });
    if (!has_smaller) minimal.push_back(c);
  }
  return minimal;
}

bool pareto_dominates(const Economy& economy, const Allocation& sigma, const Allocation& mu) {
  validate_allocation(economy, sigma);
  validate_allocation(economy, mu);
  bool strict = false;
  for (int i = 0; i < economy.num_agents(); ++i) {
    if (economy.prefers(i, mu[i], sigma[i])) return false;
    if (economy.prefers(i, sigma[i], mu[i])) strict = true;
  }
  return strict;
}

bool pareto_efficient(const Economy& economy, const Allocation& mu, const SearchLimits& limits) {
  validate_allocation(economy, mu);
  bool dominated = false;
  for_each_allocation(
      economy,
      [&](const Allocation& sigma) {
        if (!dominated && pareto_dominates(economy, sigma, mu)) dominated = true;
      },
      limits);
  return !dominated;
}

void check_enumeration_bounds(const Economy& economy, const SearchLimits& limits) {
  if (economy.num_agents() > limits.max_agents) {
    throw CapacityError("economy has " + std::to_string(economy.num_agents()) +
                        " agents; exhaustive search bound is " + std::to_string(limits.max_agents) +
                        " (CORE_SOLVE_MAX_AGENTS)");
  }
  if (economy.num_objects() > limits.max_objects) {
    throw CapacityError("economy has " + std::to_string(economy.num_objects()) +
                        " objects; exhaustive search bound is " + std::to_string(limits.max_objects));
  }
}

namespace {

void extend(const Economy& economy, int agent, ObjectSet used, Allocation& current,
            const std::function<void(const Allocation&)>& visit) {
  if (agent == economy.num_agents()) {
    visit(current);
    return;
  }
  for (int o = 0; o < economy.num_objects(); ++o) {
    if (used.contains(o)) continue;
    current.assign(agent, ObjectRef::object(o));
    ObjectSet next = used;
    next.insert(o);
    extend(economy, agent + 1, next, current, visit);
  }
  current.assign(agent, ObjectRef::null());
  extend(economy, agent + 1, used, current, visit);
}

}  // namespace

void for_each_allocation(const Economy& economy, const std::function<void(const Allocation&)>& visit,
                         const SearchLimits& limits) {
  check_enumeration_bounds(economy, limits);
  Allocation current = Allocation::empty(economy.num_agents());
  extend(economy, 0, ObjectSet{}, current, visit);
}

std::vector<Allocation> enumerate_allocations(const Economy& economy, const SearchLimits& limits) {
  std::vector<Allocation> out;
  for_each_allocation(economy, [&](const Allocation& a) { out.push_back(a); }, limits);
  return out;
}

}  // namespace endow
