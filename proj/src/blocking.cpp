#include "endow/blocking.hpp"

#include <array>
#include <utility>

#include "endow/control.hpp"
#include "endow/error.hpp"

namespace endow {

namespace {

constexpr std::array<std::pair<BlockingConcept, std::string_view>, 6> kBlockingNames{{
    {BlockingConcept::weak, "weak"},
    {BlockingConcept::strong, "strong"},
    {BlockingConcept::exclusion, "exclusion"},
    {BlockingConcept::weak_exclusion, "weak-exclusion"},
    {BlockingConcept::effective, "effective"},
    {BlockingConcept::rectification, "rectification"},
}};

void check_inputs(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu) {
  validate_coalition(economy, coalition);
  validate_allocation(economy, sigma);
  validate_allocation(economy, mu);
}

/// Every member weakly better off and at least one strictly.
bool weak_improvement(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu) {
  bool strict = false;
  bool ok = true;
  coalition.for_each([&](int i) {
    if (economy.prefers(i, mu[i], sigma[i])) ok = false;
    if (economy.prefers(i, sigma[i], mu[i])) strict = true;
  });
  return ok && strict;
}

bool strict_improvement(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu) {
  bool ok = true;
  coalition.for_each([&](int i) {
    if (!economy.prefers(i, sigma[i], mu[i])) ok = false;
  });
  return ok;
}

/// σ(group) ⊆ ω(owners_of) ∪ {o*}.
bool within_endowment(const Economy& economy, AgentSet group, AgentSet owners_of, const Allocation& sigma) {
  return sigma.objects_of(group).subset_of(economy.endowment_of(owners_of));
}

AgentSet harmed_outsiders(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu) {
  AgentSet harmed;
  (economy.all_agents() - coalition).for_each([&](int j) {
    if (economy.prefers(j, mu[j], sigma[j])) harmed.insert(j);
  });
  return harmed;
}

/// Members of C_{σ=μ} whose σ-assignments come from their own endowment,
/// enumerated as every nonempty self-enforcing C' ⊆ unaffected.
template <typename Fn>
bool any_self_enforcing_subset(const Economy& economy, AgentSet unaffected, const Allocation& sigma, Fn&& fn) {
  return unaffected.for_each_nonempty_subset([&](AgentSet sub) {
    return within_endowment(economy, sub, sub, sigma) && fn(sub);
  });
}

/// Shared clause 3 of effective and rectification blocking; `restricted(o)`
/// says whether redundant object o is barred from σ(C).
template <typename Restricted>
bool redundancy_respected(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu,
                          Restricted&& restricted) {
  const AgentSet unaffected = partition_by_effect(economy, coalition, sigma, mu).unaffected;
  const ObjectSet handed_out = sigma.objects_of(coalition);
  const bool violated = any_self_enforcing_subset(economy, unaffected, sigma, [&](AgentSet sub) {
    const ObjectSet redundant = economy.endowment_of(sub) - sigma.objects_of(sub);
    bool bad = false;
    redundant.for_each([&](int o) {
      if (restricted(o) && handed_out.contains(o)) bad = true;
    });
    return bad;
  });
  return !violated;
}

}  // namespace

std::string_view to_string(BlockingConcept kind) {
  for (const auto& [c, name] : kBlockingNames) {
    if (c == kind) return name;
  }
  return "?";
}

std::optional<BlockingConcept> parse_blocking_concept(std::string_view name) {
  for (const auto& [c, n] : kBlockingNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

EffectPartition partition_by_effect(const Economy& economy, AgentSet coalition, const Allocation& sigma,
                                    const Allocation& mu) {
  check_inputs(economy, coalition, sigma, mu);
  EffectPartition out;
  coalition.for_each([&](int i) {
    if (sigma[i] == mu[i]) {
      out.unaffected.insert(i);
    } else if (economy.prefers(i, sigma[i], mu[i])) {
      out.better.insert(i);
    } else {
      out.worse.insert(i);
    }
  });
  return out;
}

bool weakly_blocks(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu) {
  check_inputs(economy, coalition, sigma, mu);
  return weak_improvement(economy, coalition, sigma, mu) && within_endowment(economy, coalition, coalition, sigma);
}

bool strongly_blocks(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu) {
  check_inputs(economy, coalition, sigma, mu);
  return strict_improvement(economy, coalition, sigma, mu) && within_endowment(economy, coalition, coalition, sigma);
}

bool exclusion_blocks(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu) {
  check_inputs(economy, coalition, sigma, mu);
  if (!strict_improvement(economy, coalition, sigma, mu)) return false;
  const ObjectSet control = control_closure(economy, coalition, AgentSet{}, mu).objects;
  bool ok = true;
  harmed_outsiders(economy, coalition, sigma, mu).for_each([&](int j) {
    if (mu[j].is_null() || !control.contains(mu[j].index())) ok = false;
  });
  return ok;
}

bool weakly_exclusion_blocks(const Economy& economy, AgentSet coalition, const Allocation& sigma,
                             const Allocation& mu) {
  check_inputs(economy, coalition, sigma, mu);
  if (!weak_improvement(economy, coalition, sigma, mu)) return false;
  const AgentSet unaffected = partition_by_effect(economy, coalition, sigma, mu).unaffected;
  if (!within_endowment(economy, unaffected, coalition, sigma)) return false;

  const AgentSet harmed = harmed_outsiders(economy, coalition, sigma, mu);
  if (harmed.empty()) return true;
  const ObjectSet control = control_closure(economy, coalition, AgentSet{}, mu).objects;
  ObjectSet taken;
  bool ok = true;
  harmed.for_each([&](int j) {
    if (mu[j].is_null() || !control.contains(mu[j].index())) {
      ok = false;
    } else {
      taken.insert(mu[j].index());
    }
  });
  if (!ok) return false;
  // C' ranges over self-enforcing subsets of the unaffected members; each is a
  // proper subcoalition because C contains a strict improver.
  const bool own_right_used = any_self_enforcing_subset(economy, unaffected, sigma, [&](AgentSet sub) {
    const ObjectSet own = control_closure(economy, sub, coalition - sub, mu).objects;
    return own.intersects(taken);
  });
  return !own_right_used;
}

bool effectively_blocks(const Economy& economy, AgentSet coalition, const Allocation& sigma, const Allocation& mu) {
  if (!weakly_blocks(economy, coalition, sigma, mu)) return false;
  if (coalition == economy.all_agents()) return true;
  return redundancy_respected(economy, coalition, sigma, mu, [](int) { return true; });
}

bool rectification_blocks(const Economy& economy, AgentSet coalition, const Allocation& sigma,
                          const Allocation& mu) {
  if (!weakly_blocks(economy, coalition, sigma, mu)) return false;
  return redundancy_respected(economy, coalition, sigma, mu, [&](int o) {
    const int occupant = mu.holder(o);
    return occupant >= 0 && !coalition.contains(occupant);
  });
}

bool blocks(const Economy& economy, BlockingConcept kind, AgentSet coalition, const Allocation& sigma,
            const Allocation& mu) {
  switch (kind) {
    case BlockingConcept::weak: return weakly_blocks(economy, coalition, sigma, mu);
    case BlockingConcept::strong: return strongly_blocks(economy, coalition, sigma, mu);
    case BlockingConcept::exclusion: return exclusion_blocks(economy, coalition, sigma, mu);
    case BlockingConcept::weak_exclusion: return weakly_exclusion_blocks(economy, coalition, sigma, mu);
    case BlockingConcept::effective: return effectively_blocks(economy, coalition, sigma, mu);
    case BlockingConcept::rectification: return rectification_blocks(economy, coalition, sigma, mu);
  }
  return false;
}

bool verify_certificate(const Economy& economy, const Allocation& mu, const BlockingCertificate& certificate) {
  return certificate.alternative != mu &&
         blocks(economy, certificate.kind, certificate.coalition, certificate.alternative, mu);
}

// ---------------------------------------------------------------------------
// Search kernel. For a fixed μ and alternative σ, clause 1 of every kind
// confines C to subsets of the weak (or strict) improvers, and the subset
// quantifiers collapse because self-enforcing groups are closed under union:
// the union of all self-enforcing C' ⊆ X is the largest one, and both Ω* and
// the "redundant object" tests are monotone in C'.

namespace {

struct MuView {
  const Allocation* allocation;
  std::vector<int> rank;
  std::vector<int> holder;  // per object, -1 if unassigned
};

class Candidate {
 public:
  Candidate(const Economy& economy, const MuView& mu, const Allocation& sigma, const int* ranks,
            const AgentSet* needs)
      : economy_(economy), mu_(mu), sigma_(sigma), needs_(needs) {
    for (int i = 0; i < economy.num_agents(); ++i) {
      if (ranks[i] <= mu.rank[static_cast<std::size_t>(i)]) weak_.insert(i);
      if (ranks[i] < mu.rank[static_cast<std::size_t>(i)]) strict_.insert(i);
    }
    harmed_ = economy.all_agents() - weak_;
    harmed_.for_each([&](int j) {
      const ObjectRef x = (*mu.allocation)[j];
      if (x.is_null()) {
        harmed_null_ = true;
      } else {
        taken_.insert(x.index());
      }
    });
  }

  AgentSet weak() const { return weak_; }
  AgentSet strict() const { return strict_; }

  AgentSet need(AgentSet group) const {
    AgentSet out;
    group.for_each([&](int i) { out |= needs_[i]; });
    return out;
  }

  /// Largest self-enforcing subset of `group` under σ.
  AgentSet largest_self_enforcing(AgentSet group) const {
    for (;;) {
      AgentSet keep;
      group.for_each([&](int i) {
        if (needs_[i].subset_of(group)) keep.insert(i);
      });
      if (keep == group) return group;
      group = keep;
    }
  }

  /// Clause 3 of exclusion blocking given the harmed agents fixed by σ.
  bool harm_controlled(AgentSet coalition) const {
    if (harmed_.empty()) return true;
    if (harmed_null_) return false;
    return taken_.subset_of(control_closure(economy_, coalition, AgentSet{}, *mu_.allocation).objects);
  }

  bool weakly_blocked_by(AgentSet c) const { return c.intersects(strict_) && need(c).subset_of(c); }

  bool exclusion_blocked_by(AgentSet c) const { return harm_controlled(c); }

  bool weak_exclusion_blocked_by(AgentSet c) const {
    if (!c.intersects(strict_)) return false;
    const AgentSet unaffected = c - strict_;
    if (!need(unaffected).subset_of(c)) return false;
    if (!harm_controlled(c)) return false;
    if (harmed_.empty()) return true;
    const AgentSet own = largest_self_enforcing(unaffected);
    if (own.empty()) return true;
    return !control_closure(economy_, own, c - own, *mu_.allocation).objects.intersects(taken_);
  }

  template <typename Restricted>
  bool redundancy_respected(AgentSet c, Restricted&& restricted) const {
    const AgentSet unaffected = c - strict_;
    bool ok = true;
    c.for_each([&](int k) {
      if (!ok || sigma_[k].is_null()) return;
      const int o = sigma_[k].index();
      if (!restricted(o)) return;
      // o is redundant for some self-enforcing C' ⊆ unaffected \ {k} iff its
      // owners fit inside the largest such C'.
      AgentSet rest = unaffected;
      rest.erase(k);
      if (economy_.owners(o).subset_of(largest_self_enforcing(rest))) ok = false;
    });
    return ok;
  }

  bool effectively_blocked_by(AgentSet c) const {
    if (!weakly_blocked_by(c)) return false;
    if (c == economy_.all_agents()) return true;
    return redundancy_respected(c, [](int) { return true; });
  }

  bool rectification_blocked_by(AgentSet c) const {
    if (!weakly_blocked_by(c)) return false;
    return redundancy_respected(c, [&](int o) {
      const int occupant = mu_.holder[static_cast<std::size_t>(o)];
      return occupant >= 0 && !c.contains(occupant);
    });
  }

  std::optional<AgentSet> first_coalition(BlockingConcept kind) const {
    std::optional<AgentSet> found;
    auto take = [&](AgentSet c) {
      found = c;
      return true;
    };
    switch (kind) {
      case BlockingConcept::strong:
        strict_.for_each_nonempty_subset([&](AgentSet c) { return need(c).subset_of(c) && take(c); });
        break;
      case BlockingConcept::weak:
        weak_.for_each_nonempty_subset([&](AgentSet c) { return weakly_blocked_by(c) && take(c); });
        break;
      case BlockingConcept::exclusion:
        strict_.for_each_nonempty_subset([&](AgentSet c) { return exclusion_blocked_by(c) && take(c); });
        break;
      case BlockingConcept::weak_exclusion:
        weak_.for_each_nonempty_subset([&](AgentSet c) { return weak_exclusion_blocked_by(c) && take(c); });
        break;
      case BlockingConcept::effective:
        weak_.for_each_nonempty_subset([&](AgentSet c) { return effectively_blocked_by(c) && take(c); });
        break;
      case BlockingConcept::rectification:
        weak_.for_each_nonempty_subset([&](AgentSet c) { return rectification_blocked_by(c) && take(c); });
        break;
    }
    return found;
  }

 private:
  const Economy& economy_;
  const MuView& mu_;
  const Allocation& sigma_;
  const AgentSet* needs_;
  AgentSet weak_;
  AgentSet strict_;
  AgentSet harmed_;
  ObjectSet taken_;
  bool harmed_null_ = false;
};

MuView view_of(const Economy& economy, const Allocation& mu) {
  validate_allocation(economy, mu);
  MuView view{&mu, {}, std::vector<int>(static_cast<std::size_t>(economy.num_objects()), -1)};
  view.rank.reserve(static_cast<std::size_t>(economy.num_agents()));
  for (int i = 0; i < economy.num_agents(); ++i) {
    view.rank.push_back(economy.rank(i, mu[i]));
    if (mu[i].is_object()) view.holder[static_cast<std::size_t>(mu[i].index())] = i;
  }
  return view;
}

}  // namespace

BlockFinder::BlockFinder(const Economy& economy, const SearchLimits& limits)
    : economy_(economy), allocations_(enumerate_allocations(economy, limits)) {
  const int n = economy.num_agents();
  ranks_.reserve(allocations_.size() * static_cast<std::size_t>(n));
  needs_.reserve(allocations_.size() * static_cast<std::size_t>(n));
  for (const auto& sigma : allocations_) {
    for (int i = 0; i < n; ++i) {
      ranks_.push_back(economy.rank(i, sigma[i]));
      needs_.push_back(sigma[i].is_object() ? economy.owners(sigma[i].index()) : AgentSet{});
    }
  }
}

std::optional<BlockingCertificate> BlockFinder::find(const Allocation& mu, BlockingConcept kind) const {
  const MuView view = view_of(economy_, mu);
  const auto n = static_cast<std::size_t>(economy_.num_agents());
  for (std::size_t a = 0; a < allocations_.size(); ++a) {
    const Allocation& sigma = allocations_[a];
    if (sigma == mu) continue;
    const Candidate candidate(economy_, view, sigma, &ranks_[a * n], &needs_[a * n]);
    if (candidate.strict().empty()) continue;
    if (auto coalition = candidate.first_coalition(kind)) {
      return BlockingCertificate{kind, *coalition, sigma};
    }
  }
  return std::nullopt;
}

std::optional<BlockingCertificate> BlockFinder::find_exclusion_by_improvers(const Allocation& mu) const {
  const MuView view = view_of(economy_, mu);
  const auto n = static_cast<std::size_t>(economy_.num_agents());
  for (std::size_t a = 0; a < allocations_.size(); ++a) {
    const Allocation& sigma = allocations_[a];
    if (sigma == mu) continue;
    const Candidate candidate(economy_, view, sigma, &ranks_[a * n], &needs_[a * n]);
    if (candidate.strict().empty()) continue;
    if (candidate.exclusion_blocked_by(candidate.strict())) {
      return BlockingCertificate{BlockingConcept::exclusion, candidate.strict(), sigma};
    }
  }
  return std::nullopt;
}

std::optional<Allocation> BlockFinder::find_pareto_improvement(const Allocation& mu) const {
  const MuView view = view_of(economy_, mu);
  const auto n = static_cast<std::size_t>(economy_.num_agents());
  for (std::size_t a = 0; a < allocations_.size(); ++a) {
    bool all_weak = true;
    bool some_strict = false;
    for (std::size_t i = 0; i < n && all_weak; ++i) {
      const int r = ranks_[a * n + i];
      all_weak = r <= view.rank[i];
      some_strict = some_strict || r < view.rank[i];
    }
    if (all_weak && some_strict) return allocations_[a];
  }
  return std::nullopt;
}

std::optional<BlockingCertificate> find_block(const Economy& economy, const Allocation& mu, BlockingConcept kind,
                                              const SearchLimits& limits) {
  return BlockFinder(economy, limits).find(mu, kind);
}

}  // namespace endow
