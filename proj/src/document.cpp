#include "endow/document.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "endow/error.hpp"

namespace endow {

namespace {

using nlohmann::json;

struct Frame {
  bool is_object = false;
  std::set<std::string> keys;
  std::string key;
  std::size_t index = 0;
};

/// Dotted path to the current position; each frame contributes the key or
/// index it is positioned at.
std::string path_of(const std::vector<Frame>& stack) {
  std::string out;
  for (const Frame& frame : stack) {
    if (frame.is_object) {
      out += (out.empty() ? "" : ".") + frame.key;
    } else {
      out += "[" + std::to_string(frame.index) + "]";
    }
  }
  return out;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

/// Parses JSON, rejecting duplicate keys and any value that is not an
/// object, array or string.
json parse_restricted(std::string_view text) {
  std::vector<Frame> stack;
  auto advance = [&]() {
    if (!stack.empty() && !stack.back().is_object) ++stack.back().index;
  };
  json::parser_callback_t callback = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
      case json::parse_event_t::array_start:
        stack.push_back(Frame{event == json::parse_event_t::object_start, {}, {}, 0});
        break;
      case json::parse_event_t::key: {
        Frame& top = stack.back();
        top.key = parsed.get<std::string>();
        if (!top.keys.insert(top.key).second) throw ParseError(path_of(stack), "duplicate key");
        break;
      }
      case json::parse_event_t::object_end:
      case json::parse_event_t::array_end:
        stack.pop_back();
        advance();
        break;
      case json::parse_event_t::value:
        if (!parsed.is_string()) throw ParseError(path_of(stack), "only strings, lists and maps are allowed");
        advance();
        break;
    }
    return true;
  };
  try {
    return json::parse(text.begin(), text.end(), callback);
  } catch (const json::parse_error& e) {
    throw ParseError(line_column(text, e.byte), "malformed document");
  }
}

std::vector<std::string> string_list(const json& node, const std::string& where) {
  if (!node.is_array()) throw ParseError(where, "expected a list");
  std::vector<std::string> out;
  for (const auto& item : node) out.push_back(item.get<std::string>());
  return out;
}

const json& member(const json& root, const char* name) {
  const auto it = root.find(name);
  if (it == root.end()) throw ParseError(name, "missing field");
  return *it;
}

}  // namespace

Economy parse_economy(std::string_view text) {
  const json root = parse_restricted(text);
  if (!root.is_object()) throw ParseError("", "document must be a map");
  for (const auto& [key, value] : root.items()) {
    if (key != "agents" && key != "objects" && key != "ownership" && key != "preferences") {
      throw ParseError(key, "unknown field");
    }
  }
  const auto agents = string_list(member(root, "agents"), "agents");
  const auto objects = string_list(member(root, "objects"), "objects");

  std::map<std::string, int> agent_index;
  for (std::size_t k = 0; k < agents.size(); ++k) {
    const std::string where = "agents[" + std::to_string(k) + "]";
    if (agents[k].empty()) throw ParseError(where, "empty label");
    if (!agent_index.emplace(agents[k], static_cast<int>(k)).second) {
      throw ParseError(where, "duplicate agent '" + agents[k] + "'");
    }
  }
  std::map<std::string, int> object_index;
  for (std::size_t k = 0; k < objects.size(); ++k) {
    const std::string where = "objects[" + std::to_string(k) + "]";
    if (objects[k].empty()) throw ParseError(where, "empty label");
    if (objects[k] == "null") throw ParseError(where, "'null' is reserved for the null object");
    if (!object_index.emplace(objects[k], static_cast<int>(k)).second) {
      throw ParseError(where, "duplicate object '" + objects[k] + "'");
    }
  }
  if (agents.size() > static_cast<std::size_t>(Economy::kMaxAgents)) throw ParseError("agents", "too many agents");
  if (objects.size() > static_cast<std::size_t>(Economy::kMaxObjects)) {
    throw ParseError("objects", "too many objects");
  }

  const json& ownership = member(root, "ownership");
  if (!ownership.is_object()) throw ParseError("ownership", "expected a map");
  OwnershipMap owners(objects.size());
  for (const auto& [object, list] : ownership.items()) {
    const std::string where = "ownership." + object;
    const auto it = object_index.find(object);
    if (it == object_index.end()) throw ParseError(where, "unknown object '" + object + "'");
    const auto names = string_list(list, where);
    if (names.empty()) throw ParseError(where, "owner list is empty");
    AgentSet& c = owners[static_cast<std::size_t>(it->second)];
    for (std::size_t k = 0; k < names.size(); ++k) {
      const std::string at = where + "[" + std::to_string(k) + "]";
      const auto a = agent_index.find(names[k]);
      if (a == agent_index.end()) throw ParseError(at, "unknown agent '" + names[k] + "'");
      if (c.contains(a->second)) throw ParseError(at, "agent '" + names[k] + "' listed twice");
      c.insert(a->second);
    }
  }
  for (std::size_t o = 0; o < objects.size(); ++o) {
    if (owners[o].empty()) throw ParseError("ownership", "object '" + objects[o] + "' has no entry");
  }

  const json& prefs = member(root, "preferences");
  if (!prefs.is_object()) throw ParseError("preferences", "expected a map");
  std::vector<Preference> preferences(agents.size());
  std::vector<bool> seen(agents.size(), false);
  for (const auto& [agent, list] : prefs.items()) {
    const std::string where = "preferences." + agent;
    const auto it = agent_index.find(agent);
    if (it == agent_index.end()) throw ParseError(where, "unknown agent '" + agent + "'");
    seen[static_cast<std::size_t>(it->second)] = true;
    const auto names = string_list(list, where);
    std::set<int> listed;
    for (std::size_t k = 0; k < names.size(); ++k) {
      const std::string at = where + "[" + std::to_string(k) + "]";
      const auto o = object_index.find(names[k]);
      if (o == object_index.end()) throw ParseError(at, "unknown object '" + names[k] + "'");
      if (!listed.insert(o->second).second) throw ParseError(at, "object '" + names[k] + "' ranked twice");
      preferences[static_cast<std::size_t>(it->second)].ranking.push_back(o->second);
    }
  }
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (!seen[i]) throw ParseError("preferences", "agent '" + agents[i] + "' has no entry");
  }
  try {
    return Economy(agents, objects, std::move(preferences), std::move(owners));
  } catch (const InputError& e) {
    throw ParseError("", e.what());
  }
}

std::string serialize_economy(const Economy& economy) {
  json root;
  root["agents"] = economy.agent_labels();
  root["objects"] = economy.object_labels();
  json ownership = json::object();
  for (int o = 0; o < economy.num_objects(); ++o) {
    json owners = json::array();
    economy.owners(o).for_each([&](int i) { owners.push_back(economy.agent_label(i)); });
    ownership[economy.object_label(o)] = std::move(owners);
  }
  root["ownership"] = std::move(ownership);
  json preferences = json::object();
  for (int i = 0; i < economy.num_agents(); ++i) {
    json ranking = json::array();
    for (int o : economy.preference(i).ranking) ranking.push_back(economy.object_label(o));
    preferences[economy.agent_label(i)] = std::move(ranking);
  }
  root["preferences"] = std::move(preferences);
  return root.dump(2) + "\n";
}

Economy load_economy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_economy(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

Allocation parse_allocation(const Economy& economy, std::string_view text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    const json root = parse_restricted(text);
    if (!root.is_object()) throw ParseError("allocation", "expected a map");
    for (const auto& [agent, value] : root.items()) {
      if (!value.is_string()) throw ParseError("allocation." + agent, "expected an object label");
      pairs.emplace_back(agent, value.get<std::string>());
    }
  } else {
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("allocation", "expected agent=object, got '" + item + "'");
      pairs.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
  }
  Allocation out = Allocation::empty(economy.num_agents());
  AgentSet assigned;
  for (const auto& [agent, object] : pairs) {
    const std::string where = "allocation." + agent;
    const auto i = economy.find_agent(agent);
    if (!i) throw ParseError(where, "unknown agent '" + agent + "'");
    if (assigned.contains(*i)) throw ParseError(where, "agent listed twice");
    assigned.insert(*i);
    if (object == "null") continue;
    const auto o = economy.find_object(object);
    if (!o) throw ParseError(where, "unknown object '" + object + "'");
    out.assign(*i, ObjectRef::object(*o));
  }
  try {
    validate_allocation(economy, out);
  } catch (const InputError& e) {
    throw ParseError("allocation", e.what());
  }
  return out;
}

std::string format_allocation(const Economy& economy, const Allocation& allocation) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (int i = 0; i < allocation.size(); ++i) out[economy.agent_label(i)] = economy.label(allocation[i]);
  return out.dump();
}

std::string format_agents(const Economy& economy, AgentSet agents) {
  std::string out;
  agents.for_each([&](int i) {
    if (!out.empty()) out += ',';
    out += economy.agent_label(i);
  });
  return out;
}

AgentSet parse_agents(const Economy& economy, std::string_view text) {
  AgentSet out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto i = economy.find_agent(item);
    if (!i) throw ParseError("agents", "unknown agent '" + item + "'");
    out.insert(*i);
  }
  return out;
}

PriorityOrder parse_order(const Economy& economy, std::string_view text) {
  PriorityOrder order;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto i = economy.find_agent(item);
    if (!i) throw ParseError("order", "unknown agent '" + item + "'");
    order.agents.push_back(*i);
  }
  try {
    validate_order(economy, order);
  } catch (const InputError& e) {
    throw ParseError("order", e.what());
  }
  return order;
}

std::string render_counterexample(const Economy& economy, ConsistencyMode mode, const Counterexample& c) {
  const char* side = c.extra ? "extra " : "missing ";
  if (mode == ConsistencyMode::strong_e0) {
    return std::string(c.extra ? "only in the augmented economy: " : "only in the original economy: ") +
           format_allocation(economy, c.witness);
  }
  const ReducedEconomy reduced = reduce(economy, c.mu, c.removed);
  return "mu=" + format_allocation(economy, c.mu) + " removed=" + format_agents(economy, c.removed) + " " + side +
         format_allocation(reduced.economy, c.witness);
}

}  // namespace endow
