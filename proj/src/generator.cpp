#include "endow/generator.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "endow/error.hpp"

namespace endow {

std::uint64_t SeededRandom::below(std::uint64_t bound) {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

double SeededRandom::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

std::string object_name(int o) {
  if (o < 26) return std::string(1, static_cast<char>('a' + o));
  return "o" + std::to_string(o + 1);
}

template <typename T>
void shuffle(std::vector<T>& items, SeededRandom& rng) {
  for (std::size_t k = items.size(); k > 1; --k) {
    std::swap(items[k - 1], items[static_cast<std::size_t>(rng.below(k))]);
  }
}

std::vector<int> permutation(int size, SeededRandom& rng) {
  std::vector<int> out;
  for (int k = 0; k < size; ++k) out.push_back(k);
  shuffle(out, rng);
  return out;
}

AgentSet random_nonempty(int n, SeededRandom& rng) {
  return AgentSet(rng.below((std::uint64_t{1} << n) - 1) + 1);
}

Preference random_preference(int m, double density, bool full, SeededRandom& rng) {
  Preference p;
  for (int o : permutation(m, rng)) {
    if (full || rng.unit() < density) p.ranking.push_back(o);
  }
  return p;
}

bool requires_full_acceptability(std::optional<ClassLabel> label) {
  if (!label) return false;
  switch (*label) {
    case ClassLabel::housing_market:
    case ClassLabel::augmented_housing_market:
    case ClassLabel::house_allocation:
    case ClassLabel::no_redundant_ownership:
    case ClassLabel::no_overlapping_ownership: return true;
    default: return false;
  }
}

void infeasible(const GeneratorSpec& spec, const std::string& why) {
  throw InputError("cannot generate " + std::string(to_string(*spec.class_label)) + ": " + why);
}

/// Disjoint owner sets covering `m` objects, each nonempty.
OwnershipMap disjoint_ownership(int n, int m, SeededRandom& rng) {
  OwnershipMap owners(static_cast<std::size_t>(m));
  const std::vector<int> order = permutation(n, rng);
  for (int o = 0; o < m; ++o) owners[static_cast<std::size_t>(o)].insert(order[static_cast<std::size_t>(o)]);
  for (int k = m; k < n; ++k) {
    const auto slot = static_cast<int>(rng.below(static_cast<std::uint64_t>(m) + 1));
    if (slot < m) owners[static_cast<std::size_t>(slot)].insert(order[static_cast<std::size_t>(k)]);
  }
  return owners;
}

OwnershipMap ownership_for(const GeneratorSpec& spec, SeededRandom& rng) {
  const int n = spec.agents;
  const int m = spec.objects;
  OwnershipMap owners(static_cast<std::size_t>(m));
  const AgentSet everyone = AgentSet::range(n);
  if (!spec.class_label) {
    for (auto& c : owners) c = random_nonempty(n, rng);
    return owners;
  }
  switch (*spec.class_label) {
    case ClassLabel::housing_market: {
      if (n != m) infeasible(spec, "needs as many agents as objects");
      const auto order = permutation(n, rng);
      for (int o = 0; o < m; ++o) owners[static_cast<std::size_t>(o)] = AgentSet::single(order[static_cast<std::size_t>(o)]);
      return owners;
    }
    case ClassLabel::augmented_housing_market: {
      if (m < 1 || n != m + 1) infeasible(spec, "needs one more agent than objects");
      const auto order = permutation(m, rng);
      for (int o = 0; o < m; ++o) {
        owners[static_cast<std::size_t>(o)] = AgentSet::single(order[static_cast<std::size_t>(o)]);
        owners[static_cast<std::size_t>(o)].insert(m);
      }
      return owners;
    }
    case ClassLabel::house_allocation:
      if (n != m) infeasible(spec, "needs as many agents as objects");
      [[fallthrough]];
    case ClassLabel::public_ownership:
      for (auto& c : owners) c = everyone;
      return owners;
    case ClassLabel::no_redundant_ownership: {
      if (m > n) infeasible(spec, "more objects than agents");
      // Rejection over unconstrained ownership, falling back to disjoint
      // owner sets, which always qualify.
      for (int attempt = 0; attempt < 64; ++attempt) {
        for (auto& c : owners) c = random_nonempty(n, rng);
        bool ok = !everyone.for_each_nonempty_subset([&](AgentSet c) {
          ObjectSet held;
          for (int o = 0; o < m; ++o) {
            if (owners[static_cast<std::size_t>(o)].subset_of(c)) held.insert(o);
          }
          return held.size() > c.size();
        });
        if (ok) return owners;
      }
      return disjoint_ownership(n, m, rng);
    }
    case ClassLabel::no_overlapping_ownership:
      if (m > n) infeasible(spec, "more objects than agents");
      return disjoint_ownership(n, m, rng);
    case ClassLabel::private_ownership:
      for (auto& c : owners) c = AgentSet::single(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
      return owners;
    case ClassLabel::private_public_ownership:
      for (auto& c : owners) {
        c = rng.below(2) == 0 ? everyone : AgentSet::single(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
      }
      return owners;
  }
  return owners;
}

}  // namespace

Economy generate(const GeneratorSpec& spec, const SearchLimits& limits) {
  if (spec.agents < 1 || spec.agents > limits.max_agents) {
    throw InputError("agent count must be between 1 and " + std::to_string(limits.max_agents));
  }
  if (spec.objects < 0 || spec.objects > limits.max_objects) {
    throw InputError("object count must be between 0 and " + std::to_string(limits.max_objects));
  }
  if (!(spec.density > 0.0 && spec.density <= 1.0)) throw InputError("density must lie in (0, 1]");

  SeededRandom rng(spec.seed);
  OwnershipMap owners = ownership_for(spec, rng);
  const bool full = requires_full_acceptability(spec.class_label);
  const bool augmented = spec.class_label == ClassLabel::augmented_housing_market;

  std::vector<std::string> agent_labels;
  std::vector<Preference> preferences;
  for (int i = 0; i < spec.agents; ++i) {
    const bool star = augmented && i == spec.agents - 1;
    agent_labels.push_back(star ? "i*" : std::to_string(i + 1));
    preferences.push_back(star ? Preference{} : random_preference(spec.objects, spec.density, full, rng));
  }
  std::vector<std::string> object_labels;
  for (int o = 0; o < spec.objects; ++o) object_labels.push_back(object_name(o));

  Economy economy(std::move(agent_labels), std::move(object_labels), std::move(preferences), std::move(owners));
  if (spec.class_label && !has_label(economy, *spec.class_label)) {
    throw std::logic_error("generated economy misses its class label");
  }
  return economy;
}

}  // namespace endow
