#pragma once

#include <string>
#include <string_view>

#include "endow/economy.hpp"
#include "endow/reduction.hpp"
#include "endow/yrmh.hpp"

namespace endow {

/// Parses an economy document:
///
///   {"agents": ["1", "2"], "objects": ["a"],
///    "ownership": {"a": ["1"]}, "preferences": {"1": ["a"], "2": []}}
///
/// Only objects, arrays and strings are allowed. Every object needs an
/// ownership entry and every agent a preference entry. Throws `ParseError`.
Economy parse_economy(std::string_view text);

/// Canonical form: map keys sorted, list order preserved, two-space indent,
/// trailing newline.
std::string serialize_economy(const Economy& economy);

Economy load_economy(const std::string& path);

/// Accepts a JSON object {"1": "a", "2": "null"} or the compact form
/// 1=a,2=null. Agents left out receive the null object.
Allocation parse_allocation(const Economy& economy, std::string_view text);

/// Single-line JSON object in agent order.
std::string format_allocation(const Economy& economy, const Allocation& allocation);

/// Comma-separated agent labels, or the given set parsed from such a list.
std::string format_agents(const Economy& economy, AgentSet agents);
AgentSet parse_agents(const Economy& economy, std::string_view text);

/// Comma-separated agent labels, highest priority first.
PriorityOrder parse_order(const Economy& economy, std::string_view text);

/// One-line description of a consistency failure in the economy's labels.
std::string render_counterexample(const Economy& economy, ConsistencyMode mode, const Counterexample& c);

}  // namespace endow
