#include "endow/yrmh.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "endow/error.hpp"

namespace endow {

void validate_order(const Economy& economy, const PriorityOrder& order) {
  if (static_cast<int>(order.agents.size()) != economy.num_agents()) {
    throw InputError("priority order must list every agent exactly once");
  }
  AgentSet seen;
  for (int i : order.agents) {
    if (i < 0 || i >= economy.num_agents() || seen.contains(i)) {
      throw InputError("priority order must list every agent exactly once");
    }
    seen.insert(i);
  }
}

namespace {

class Mechanism {
 public:
  Mechanism(const Economy& economy, const PriorityOrder& order)
      : economy_(economy),
        fixed_(order.agents),
        working_(order.agents),
        agents_(economy.all_agents()),
        objects_(economy.all_objects()),
        owners_(economy.ownership()),
        sharers_(static_cast<std::size_t>(economy.num_objects())),
        object_arc_(static_cast<std::size_t>(economy.num_objects()), -1),
        agent_arc_(static_cast<std::size_t>(economy.num_agents()), -1),
        allocation_(Allocation::empty(economy.num_agents())) {
    trace_.order = order;
    for (int o = 0; o < economy.num_objects(); ++o) object_arc_[idx(o)] = highest(owners_[idx(o)]);
  }

  YrmhResult run() {
    // Each step removes an agent or promotes one; the guard only catches a
    // broken invariant.
    const long guard = 64L * (economy_.num_agents() + 1) * (economy_.num_agents() + 1) * 64;
    for (int number = 1; !agents_.empty(); ++number) {
      if (number > guard) throw std::logic_error("mechanism failed to terminate");
      step_ = YrmhStep{number, {}};
      step();
      trace_.steps.push_back(std::move(step_));
    }
    return {allocation_, std::move(trace_)};
  }

 private:
  static std::size_t idx(int k) { return static_cast<std::size_t>(k); }

  int highest(AgentSet group) const {
    for (int i : fixed_) {
      if (group.contains(i)) return i;
    }
    return -1;
  }

  void record(YrmhEvent event) { step_.events.push_back(std::move(event)); }

  void repoint() {
    objects_.for_each([&](int o) {
      const int target = object_arc_[idx(o)];
      if (target < 0 || agents_.contains(target)) return;
      const AgentSet owners = owners_[idx(o)];
      const int next = !owners.empty() ? highest(owners) : highest(sharers_[idx(o)]);
      object_arc_[idx(o)] = next;
      record({YrmhEventKind::repoint, next, ObjectRef::object(o), {}, {}});
    });
  }

  void remove_agent(int i) {
    agents_.erase(i);
    agent_arc_[idx(i)] = -1;
    working_.erase(std::find(working_.begin(), working_.end(), i));
    for (std::size_t o = 0; o < owners_.size(); ++o) {
      owners_[o].erase(i);
      sharers_[o].erase(i);
    }
  }

  void remove_object(int o) {
    objects_.erase(o);
    object_arc_[idx(o)] = -1;
    for (int i = 0; i < economy_.num_agents(); ++i) {
      if (agent_arc_[idx(i)] == o) agent_arc_[idx(i)] = -1;
    }
  }

  /// Number of cycles in the agent/object pointer graph.
  int count_cycles() const {
    // Walk from every agent; out-degree is at most one, so each cycle is
    // found exactly once by marking the first agent that closes it.
    std::vector<int> colour(idx(economy_.num_agents()), 0);
    int cycles = 0;
    agents_.for_each([&](int start) {
      std::vector<int> path;
      int cur = start;
      while (cur >= 0 && colour[idx(cur)] == 0) {
        colour[idx(cur)] = 1;
        path.push_back(cur);
        const int o = agent_arc_[idx(cur)];
        cur = o < 0 ? -1 : object_arc_[idx(o)];
      }
      if (cur >= 0 && colour[idx(cur)] == 1) ++cycles;
      for (int k : path) colour[idx(k)] = 2;
    });
    return cycles;
  }

  void step() {
    repoint();
    const int top = working_.front();
    const ObjectRef choice = economy_.favorite(top, objects_);
    record({YrmhEventKind::point, top, choice, {}, {}});
    if (choice.is_null()) {
      record({YrmhEventKind::claim, top, choice, {}, {}});
      allocation_.assign(top, choice);
      remove_agent(top);
      return;
    }
    const int o = choice.index();
    agent_arc_[idx(top)] = o;
    if (count_cycles() > 1) throw std::logic_error("pointer graph holds more than one cycle");
    if (object_arc_[idx(o)] < 0) {
      record({YrmhEventKind::claim, top, choice, {}, {}});
      allocation_.assign(top, choice);
      remove_agent(top);
      remove_object(o);
      return;
    }

    std::vector<std::pair<int, int>> path{{top, o}};
    AgentSet visited = AgentSet::single(top);
    int cur = object_arc_[idx(o)];
    bool closed = false;
    while (cur >= 0 && !visited.contains(cur)) {
      visited.insert(cur);
      const int next = agent_arc_[idx(cur)];
      if (next < 0) break;
      path.emplace_back(cur, next);
      cur = object_arc_[idx(next)];
    }
    closed = cur == top;
    if (!closed) {
      const int promoted = object_arc_[idx(o)];
      working_.erase(std::find(working_.begin(), working_.end(), promoted));
      working_.insert(working_.begin(), promoted);
      record({YrmhEventKind::promote, promoted, ObjectRef::null(), {}, {}});
      return;
    }
    remove_cycle(path);
  }

  void remove_cycle(const std::vector<std::pair<int, int>>& path) {
    record({YrmhEventKind::cycle, -1, ObjectRef::null(), path, {}});
    AgentSet leaving;
    ObjectSet taken;
    for (const auto& [j, a] : path) {
      leaving.insert(j);
      taken.insert(a);
      allocation_.assign(j, ObjectRef::object(a));
    }
    const AgentSet staying = agents_ - leaving;
    const ObjectSet left_over = objects_ - taken;

    // Grants computed against the pre-removal sets, then applied.
    std::vector<AgentSet> grants(sharers_.size());
    for (const auto& [j, unused_a] : path) {
      for (const auto& [unused_j, a] : path) {
        const AgentSet heirs = (owners_[idx(a)] | sharers_[idx(a)]) & staying;
        left_over.for_each([&](int b) {
          const AgentSet holders = owners_[idx(b)] | sharers_[idx(b)];
          if (holders.contains(j)) grants[idx(b)] |= heirs - holders;
        });
      }
    }

    for (const auto& [j, a] : path) remove_agent(j);
    taken.for_each([&](int a) { remove_object(a); });
    left_over.for_each([&](int b) {
      const AgentSet fresh = grants[idx(b)] - sharers_[idx(b)];
      if (fresh.empty()) return;
      sharers_[idx(b)] |= fresh;
      record({YrmhEventKind::share, -1, ObjectRef::object(b), {}, fresh});
    });
  }

  const Economy& economy_;
  std::vector<int> fixed_;
  std::vector<int> working_;
  AgentSet agents_;
  ObjectSet objects_;
  OwnershipMap owners_;   // remaining owners C_o(t)
  OwnershipMap sharers_;  // S_o(t)
  std::vector<int> object_arc_;
  std::vector<int> agent_arc_;
  Allocation allocation_;
  YrmhTrace trace_;
  YrmhStep step_;
};

std::string join_agents(const Economy& economy, AgentSet agents) {
  std::string out;
  agents.for_each([&](int i) {
    if (!out.empty()) out += ',';
    out += economy.agent_label(i);
  });
  return out;
}

}  // namespace

YrmhResult yrmh_run(const Economy& economy, const PriorityOrder& order) {
  validate_order(economy, order);
  return Mechanism(economy, order).run();
}

Allocation replay_trace(const Economy& economy, const YrmhTrace& trace) {
  Allocation out = Allocation::empty(economy.num_agents());
  AgentSet done;
  ObjectSet used;
  auto give = [&](int agent, ObjectRef x) {
    if (agent < 0 || agent >= economy.num_agents() || done.contains(agent)) {
      throw InputError("trace assigns an agent twice");
    }
    if (x.is_object()) {
      if (x.index() >= economy.num_objects() || used.contains(x.index())) {
        throw InputError("trace assigns an object twice");
      }
      used.insert(x.index());
    }
    done.insert(agent);
    out.assign(agent, x);
  };
  for (const auto& step : trace.steps) {
    for (const auto& event : step.events) {
      if (event.kind == YrmhEventKind::claim) give(event.agent, event.object);
      if (event.kind == YrmhEventKind::cycle) {
        for (const auto& [j, a] : event.pairs) give(j, ObjectRef::object(a));
      }
    }
  }
  if (done != economy.all_agents()) throw InputError("trace leaves an agent unassigned");
  return out;
}

std::string render_trace(const Economy& economy, const YrmhTrace& trace) {
  std::ostringstream out;
  out << "order:";
  for (int i : trace.order.agents) out << ' ' << economy.agent_label(i);
  out << '\n';
  for (const auto& step : trace.steps) {
    out << "step " << step.number << ':';
    const char* sep = " ";
    for (const auto& e : step.events) {
      out << sep;
      sep = "; ";
      switch (e.kind) {
        case YrmhEventKind::repoint:
          out << economy.label(e.object) << " -> " << (e.agent < 0 ? "nobody" : economy.agent_label(e.agent));
          break;
        case YrmhEventKind::point:
          out << economy.agent_label(e.agent) << " points to " << economy.label(e.object);
          break;
        case YrmhEventKind::promote:
          out << "promote " << economy.agent_label(e.agent);
          break;
        case YrmhEventKind::cycle: {
          out << "cycle";
          for (const auto& [j, a] : e.pairs) out << " (" << economy.agent_label(j) << ',' << economy.object_label(a) << ')';
          break;
        }
        case YrmhEventKind::claim:
          out << economy.agent_label(e.agent) << " claims " << economy.label(e.object);
          break;
        case YrmhEventKind::share:
          out << "share " << economy.label(e.object) << " with " << join_agents(economy, e.agents);
          break;
      }
    }
    out << '\n';
  }
  return out.str();
}

std::vector<Allocation> yrmh_all_outcomes(const Economy& economy, const SearchLimits& limits) {
  if (economy.num_agents() > limits.max_order_agents) {
    throw CapacityError("economy has " + std::to_string(economy.num_agents()) +
                        " agents; all-orders bound is " + std::to_string(limits.max_order_agents));
  }
  PriorityOrder order;
  order.agents.resize(static_cast<std::size_t>(economy.num_agents()));
  std::iota(order.agents.begin(), order.agents.end(), 0);
  std::vector<Allocation> out;
  do {
    out.push_back(Mechanism(economy, order).run().allocation);
  } while (std::next_permutation(order.agents.begin(), order.agents.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace endow
