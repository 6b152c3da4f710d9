#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "endow/economy.hpp"

namespace endow {

enum class ClassLabel {
  housing_market,
  augmented_housing_market,
  house_allocation,
  no_redundant_ownership,
  no_overlapping_ownership,
  private_ownership,
  public_ownership,
  private_public_ownership,
};

inline constexpr ClassLabel kAllClassLabels[] = {
    ClassLabel::housing_market,         ClassLabel::augmented_housing_market, ClassLabel::house_allocation,
    ClassLabel::no_redundant_ownership, ClassLabel::no_overlapping_ownership, ClassLabel::private_ownership,
    ClassLabel::public_ownership,       ClassLabel::private_public_ownership,
};

std::string_view to_string(ClassLabel label);
std::optional<ClassLabel> parse_class_label(std::string_view name);

/// Largest economy whose coalitions the no-redundant test will sweep.
inline constexpr int kMaxClassifyAgents = 24;

bool has_label(const Economy& economy, ClassLabel label);

/// Every label whose predicate holds, in `kAllClassLabels` order. Throws
/// `CapacityError` past `kMaxClassifyAgents`.
std::vector<ClassLabel> classify(const Economy& economy);

bool all_objects_acceptable(const Economy& economy);

/// Objects owned by every agent. With a single agent every object counts as
/// private, so this is empty.
ObjectSet public_objects(const Economy& economy);

/// Label for an added agent: "i*", suffixed until it is unused.
std::string fresh_agent_label(const Economy& economy);

/// Adds an agent who accepts nothing and co-owns every object with its
/// original owner. The new agent is the last index.
Economy augment_housing_market(const Economy& economy);

/// Hands every public object to a new agent who accepts nothing, leaving
/// private objects as they are. The new agent is the last index.
Economy augment_private_public(const Economy& economy);

}  // namespace endow
