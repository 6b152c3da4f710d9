#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "endow/index_set.hpp"
#include "endow/limits.hpp"

namespace endow {

/// Either a real object index or the null object. The null object orders
/// after every real object, which is what makes allocation order canonical.
class ObjectRef {
 public:
  constexpr ObjectRef() = default;
  static constexpr ObjectRef null() { return ObjectRef(); }
  static constexpr ObjectRef object(int index) { return ObjectRef(static_cast<std::uint16_t>(index)); }

  constexpr bool is_null() const { return code_ == kNullCode; }
  constexpr bool is_object() const { return code_ != kNullCode; }
  /// Real object index; only meaningful when `is_object()`.
  constexpr int index() const { return code_; }

  constexpr auto operator<=>(const ObjectRef&) const = default;

 private:
  static constexpr std::uint16_t kNullCode = 0xFFFF;
  constexpr explicit ObjectRef(std::uint16_t code) : code_(code) {}
  std::uint16_t code_ = kNullCode;
};

/// Owner set C_o for every real object, indexed by object.
using OwnershipMap = std::vector<AgentSet>;

/// Strict preferences, most preferred first. Only acceptable objects are
/// listed; the null object sits right after the last listed object.
struct Preference {
  std::vector<int> ranking;
};

/// Discrete exchange economy: agents, objects, strict preferences and
/// collective ownership. Immutable once constructed.
class Economy {
 public:
  static constexpr int kMaxAgents = AgentSet::kCapacity - 1;
  static constexpr int kMaxObjects = ObjectSet::kCapacity - 1;

  /// Validates every invariant and throws `InputError` on violation.
  Economy(std::vector<std::string> agent_labels, std::vector<std::string> object_labels,
          std::vector<Preference> preferences, OwnershipMap owners);

  int num_agents() const { return static_cast<int>(agent_labels_.size()); }
  int num_objects() const { return static_cast<int>(object_labels_.size()); }
  AgentSet all_agents() const { return AgentSet::range(num_agents()); }
  ObjectSet all_objects() const { return ObjectSet::range(num_objects()); }

  const std::string& agent_label(int i) const { return agent_labels_.at(static_cast<std::size_t>(i)); }
  const std::string& object_label(int o) const { return object_labels_.at(static_cast<std::size_t>(o)); }
  std::string label(ObjectRef ref) const { return ref.is_null() ? "null" : object_label(ref.index()); }
  const std::vector<std::string>& agent_labels() const { return agent_labels_; }
  const std::vector<std::string>& object_labels() const { return object_labels_; }
  std::optional<int> find_agent(const std::string& label) const;
  std::optional<int> find_object(const std::string& label) const;

  const Preference& preference(int i) const { return preferences_.at(static_cast<std::size_t>(i)); }
  const OwnershipMap& ownership() const { return owners_; }
  AgentSet owners(int o) const { return owners_[static_cast<std::size_t>(o)]; }

  /// Position of `x` in agent i's strict order, 0 = best. Unacceptable objects
  /// rank below null; among themselves they order by object index.
  int rank(int i, ObjectRef x) const {
    const int column = x.is_null() ? num_objects() : x.index();
    return rank_[static_cast<std::size_t>(i * (num_objects() + 1) + column)];
  }
  bool prefers(int i, ObjectRef x, ObjectRef y) const { return rank(i, x) < rank(i, y); }
  bool weakly_prefers(int i, ObjectRef x, ObjectRef y) const { return rank(i, x) <= rank(i, y); }
  bool acceptable(int i, int o) const { return prefers(i, ObjectRef::object(o), ObjectRef::null()); }
  /// Most preferred element of `available` together with the null object.
  ObjectRef favorite(int i, ObjectSet available) const;

  /// ω(C): objects whose whole owner set lies inside `coalition`. Unchecked.
  ObjectSet endowment_of(AgentSet coalition) const;

  bool operator==(const Economy& other) const;

 private:
  std::vector<std::string> agent_labels_;
  std::vector<std::string> object_labels_;
  std::vector<Preference> preferences_;
  OwnershipMap owners_;
  std::vector<int> rank_;
};

/// One entry per agent; every real object is used at most once.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<ObjectRef> assignment) : assignment_(std::move(assignment)) {}
  /// All agents receive the null object.
  static Allocation empty(int num_agents) { return Allocation(std::vector<ObjectRef>(static_cast<std::size_t>(num_agents))); }

  int size() const { return static_cast<int>(assignment_.size()); }
  ObjectRef operator[](int i) const { return assignment_[static_cast<std::size_t>(i)]; }
  void assign(int i, ObjectRef x) { assignment_[static_cast<std::size_t>(i)] = x; }
  const std::vector<ObjectRef>& assignment() const { return assignment_; }

  /// μ(C) restricted to real objects.
  ObjectSet objects_of(AgentSet coalition) const;
  /// Agent holding object `o`, or -1.
  int holder(int o) const;

  /// Canonical order: lexicographic by agent, object index ascending, null last.
  auto operator<=>(const Allocation&) const = default;

 private:
  std::vector<ObjectRef> assignment_;
};

/// Throws `InputError` unless `allocation` is valid for `economy`.
void validate_allocation(const Economy& economy, const Allocation& allocation);
/// Throws `InputError` unless `coalition` is a nonempty subset of the agents.
void validate_coalition(const Economy& economy, AgentSet coalition);

ObjectSet endowment(const Economy& economy, AgentSet coalition);

/// μ(C) ⊆ ω(C) ∪ {o*}.
bool is_self_enforcing(const Economy& economy, AgentSet coalition, const Allocation& allocation);

/// Self-enforcing proper subsets of I with no self-enforcing proper
/// subcoalition, in ascending bitset order.
std::vector<AgentSet> minimal_self_enforcing(const Economy& economy, const Allocation& allocation);

/// Every agent weakly prefers σ and at least one strictly.
bool pareto_dominates(const Economy& economy, const Allocation& sigma, const Allocation& mu);
bool pareto_efficient(const Economy& economy, const Allocation& mu,
                      const SearchLimits& limits = SearchLimits::from_environment());

/// Throws `CapacityError` if the economy is too large to enumerate.
void check_enumeration_bounds(const Economy& economy, const SearchLimits& limits);

/// Calls `visit` on every allocation in canonical order.
void for_each_allocation(const Economy& economy, const std::function<void(const Allocation&)>& visit,
                         const SearchLimits& limits = SearchLimits::from_environment());

std::vector<Allocation> enumerate_allocations(const Economy& economy,
                                              const SearchLimits& limits = SearchLimits::from_environment());

}  // namespace endow
