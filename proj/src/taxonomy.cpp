#include "endow/taxonomy.hpp"

#include <array>
#include <utility>

#include "endow/error.hpp"

namespace endow {

namespace {

constexpr std::array<std::pair<ClassLabel, std::string_view>, 8> kClassNames{{
    {ClassLabel::housing_market, "housing-market"},
    {ClassLabel::augmented_housing_market, "augmented-housing-market"},
    {ClassLabel::house_allocation, "house-allocation"},
    {ClassLabel::no_redundant_ownership, "no-redundant-ownership"},
    {ClassLabel::no_overlapping_ownership, "no-overlapping-ownership"},
    {ClassLabel::private_ownership, "private-ownership"},
    {ClassLabel::public_ownership, "public-ownership"},
    {ClassLabel::private_public_ownership, "private-public-ownership"},
}};

bool every_object(const Economy& economy, auto&& pred) {
  for (int o = 0; o < economy.num_objects(); ++o) {
    if (!pred(economy.owners(o))) return false;
  }
  return true;
}

bool disjoint_owners(const Economy& economy) {
  AgentSet seen;
  for (int o = 0; o < economy.num_objects(); ++o) {
    if (economy.owners(o).intersects(seen)) return false;
    seen |= economy.owners(o);
  }
  return true;
}

bool private_owned(const Economy& economy) {
  return every_object(economy, [](AgentSet c) { return c.size() == 1; });
}

bool housing_market(const Economy& economy) {
  return economy.num_agents() == economy.num_objects() && all_objects_acceptable(economy) &&
         private_owned(economy) && disjoint_owners(economy);
}

bool no_redundant(const Economy& economy) {
  if (!all_objects_acceptable(economy)) return false;
  if (economy.num_agents() > kMaxClassifyAgents) {
    throw CapacityError("no-redundant-ownership test sweeps coalitions of at most " +
                        std::to_string(kMaxClassifyAgents) + " agents");
  }
  return !economy.all_agents().for_each_nonempty_subset(
      [&](AgentSet c) { return economy.endowment_of(c).size() > c.size(); });
}

/// The agent playing i* if the economy is an augmented housing market.
std::optional<int> augmenting_agent(const Economy& economy) {
  const int n = economy.num_agents();
  const int m = economy.num_objects();
  if (m < 1 || n != m + 1) return std::nullopt;
  AgentSet common = economy.all_agents();
  for (int o = 0; o < m; ++o) common &= economy.owners(o);
  if (common.size() != 1) return std::nullopt;
  const int star = common.first();
  if (!economy.preference(star).ranking.empty()) return std::nullopt;
  AgentSet seen;
  for (int o = 0; o < m; ++o) {
    AgentSet rest = economy.owners(o);
    rest.erase(star);
    if (rest.size() != 1 || rest.intersects(seen)) return std::nullopt;
    seen |= rest;
  }
  for (int i = 0; i < n; ++i) {
    if (i != star && static_cast<int>(economy.preference(i).ranking.size()) != m) return std::nullopt;
  }
  return star;
}

void require_label(const Economy& economy, ClassLabel label) {
  if (!has_label(economy, label)) {
    throw InputError("economy is not " + std::string(to_string(label)));
  }
}

Economy with_extra_agent(const Economy& economy, OwnershipMap owners) {
  std::vector<std::string> agents = economy.agent_labels();
  agents.push_back(fresh_agent_label(economy));
  std::vector<Preference> preferences;
  for (int i = 0; i < economy.num_agents(); ++i) preferences.push_back(economy.preference(i));
  preferences.push_back(Preference{});
  return Economy(std::move(agents), economy.object_labels(), std::move(preferences), std::move(owners));
}

}  // namespace

std::string_view to_string(ClassLabel label) {
  for (const auto& [l, name] : kClassNames) {
    if (l == label) return name;
  }
  return "?";
}

std::optional<ClassLabel> parse_class_label(std::string_view name) {
  for (const auto& [l, n] : kClassNames) {
    if (n == name) return l;
  }
  return std::nullopt;
}

bool all_objects_acceptable(const Economy& economy) {
  for (int i = 0; i < economy.num_agents(); ++i) {
    if (static_cast<int>(economy.preference(i).ranking.size()) != economy.num_objects()) return false;
  }
  return true;
}

ObjectSet public_objects(const Economy& economy) {
  ObjectSet out;
  if (economy.num_agents() < 2) return out;
  for (int o = 0; o < economy.num_objects(); ++o) {
    if (economy.owners(o) == economy.all_agents()) out.insert(o);
  }
  return out;
}

bool has_label(const Economy& economy, ClassLabel label) {
  const AgentSet everyone = economy.all_agents();
  switch (label) {
    case ClassLabel::housing_market: return housing_market(economy);
    case ClassLabel::augmented_housing_market: return augmenting_agent(economy).has_value();
    case ClassLabel::house_allocation:
      return economy.num_agents() == economy.num_objects() && all_objects_acceptable(economy) &&
             every_object(economy, [&](AgentSet c) { return c == everyone; });
    case ClassLabel::no_redundant_ownership: return no_redundant(economy);
    case ClassLabel::no_overlapping_ownership: return all_objects_acceptable(economy) && disjoint_owners(economy);
    case ClassLabel::private_ownership: return private_owned(economy);
    case ClassLabel::public_ownership:
      return every_object(economy, [&](AgentSet c) { return c == everyone; });
    case ClassLabel::private_public_ownership:
      return every_object(economy, [&](AgentSet c) { return c.size() == 1 || c == everyone; });
  }
  return false;
}

std::vector<ClassLabel> classify(const Economy& economy) {
  std::vector<ClassLabel> out;
  for (ClassLabel label : kAllClassLabels) {
    if (has_label(economy, label)) out.push_back(label);
  }
  return out;
}

std::string fresh_agent_label(const Economy& economy) {
  std::string label = "i*";
  while (economy.find_agent(label)) label += '*';
  return label;
}

Economy augment_housing_market(const Economy& economy) {
  require_label(economy, ClassLabel::housing_market);
  OwnershipMap owners = economy.ownership();
  for (auto& c : owners) c.insert(economy.num_agents());
  return with_extra_agent(economy, std::move(owners));
}

Economy augment_private_public(const Economy& economy) {
  require_label(economy, ClassLabel::private_public_ownership);
  OwnershipMap owners = economy.ownership();
  const ObjectSet shared = public_objects(economy);
  shared.for_each([&](int o) { owners[static_cast<std::size_t>(o)] = AgentSet::single(economy.num_agents()); });
  return with_extra_agent(economy, std::move(owners));
}

}  // namespace endow
