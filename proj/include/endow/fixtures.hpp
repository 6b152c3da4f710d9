#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endow/economy.hpp"
#include "endow/reduction.hpp"

namespace endow {

struct NamedAllocation {
  std::string name;
  std::string literal;  ///< allocation literal in the fixture's labels
};

struct ConsistencyProbe {
  Solution solution;
  ConsistencyMode mode;
};

/// One committed example economy and what its report covers.
struct Fixture {
  std::string id;
  std::string summary;
  std::vector<NamedAllocation> allocations;
  std::optional<std::string> yrmh_order;  ///< comma-separated agent labels
  std::vector<ConsistencyProbe> probes;
};

const std::vector<Fixture>& fixture_registry();
const Fixture* find_fixture(const std::string& id);

/// Directory holding <id>.json and golden/<id>.txt, fixed at build time.
std::string default_fixture_dir();

std::string fixture_path(const std::string& dir, const std::string& id);
std::string golden_path(const std::string& dir, const std::string& id);

/// Named allocations resolved against the fixture economy.
std::vector<std::pair<std::string, Allocation>> resolve_allocations(const Fixture& fixture, const Economy& economy);

/// Deterministic text report: classes, every core, mechanism outcomes and
/// the fixture's consistency probes.
std::string fixture_report(const Fixture& fixture, const Economy& economy,
                           const SearchLimits& limits = SearchLimits::from_environment());

}  // namespace endow
