#include <gtest/gtest.h>

#include <numeric>

#include "endow/cores.hpp"
#include "endow/error.hpp"
#include "endow/yrmh.hpp"
#include "support.hpp"

namespace endow {
namespace {

using testing::fixture_economy;
using testing::lit;
using testing::lits;

std::vector<PriorityOrder> all_orders(int n) {
  std::vector<PriorityOrder> out;
  PriorityOrder order;
  order.agents.resize(static_cast<std::size_t>(n));
  std::iota(order.agents.begin(), order.agents.end(), 0);
  do {
    out.push_back(order);
  } while (std::next_permutation(order.agents.begin(), order.agents.end()));
  return out;
}

// Each agent in turn takes her favorite remaining object.
Allocation serial_dictatorship(const Economy& e, const PriorityOrder& order) {
  Allocation out = Allocation::empty(e.num_agents());
  ObjectSet left = e.all_objects();
  for (int i : order.agents) {
    const ObjectRef x = e.favorite(i, left);
    out.assign(i, x);
    if (x.is_object()) left.erase(x.index());
  }
  return out;
}

// Top trading cycles for a housing market: every object has one owner.
Allocation top_trading_cycles(const Economy& e) {
  std::vector<int> owner(static_cast<std::size_t>(e.num_objects()));
  for (int o = 0; o < e.num_objects(); ++o) owner[static_cast<std::size_t>(o)] = e.owners(o).first();
  Allocation out = Allocation::empty(e.num_agents());
  AgentSet agents_left = e.all_agents();
  ObjectSet objects_left = e.all_objects();
  while (!agents_left.empty()) {
    std::vector<ObjectRef> points(static_cast<std::size_t>(e.num_agents()));
    agents_left.for_each([&](int i) { points[static_cast<std::size_t>(i)] = e.favorite(i, objects_left); });
    bool removed = false;
    agents_left.for_each([&](int i) {
      if (removed || points[static_cast<std::size_t>(i)].is_object()) return;
      agents_left.erase(i);
      removed = true;
    });
    if (removed) continue;
    int cur = agents_left.first();
    for (int k = 0; k < e.num_agents(); ++k) cur = owner[static_cast<std::size_t>(points[static_cast<std::size_t>(cur)].index())];
    const int start = cur;
    do {
      const ObjectRef x = points[static_cast<std::size_t>(cur)];
      out.assign(cur, x);
      agents_left.erase(cur);
      objects_left.erase(x.index());
      cur = owner[static_cast<std::size_t>(x.index())];
    } while (cur != start);
  }
  return out;
}

TEST(Yrmh, Example5Trace) {
  const Economy e = fixture_economy("ex5");
  const YrmhResult result = yrmh_run(e, parse_order(e, "4,2,3,1"));
  EXPECT_EQ(result.allocation, lit(e, "2=a,3=b,1=c,4=d"));
  EXPECT_EQ(render_trace(e, result.trace),
            "order: 4 2 3 1\n"
            "step 1: 4 points to a; promote 2\n"
            "step 2: 2 points to a; cycle (2,a); share b with 1,3\n"
            "step 3: b -> 3; 4 points to b; promote 3\n"
            "step 4: 3 points to b; cycle (3,b); share c with 1\n"
            "step 5: c -> 1; 4 points to d; cycle (4,d)\n"
            "step 6: 1 points to c; cycle (1,c)\n");
}

TEST(Yrmh, Example6Outcomes) {
  const Economy e = fixture_economy("ex6");
  EXPECT_EQ(yrmh_all_outcomes(e), lits(e, {"4=a,1=b,3=c,2=d", "1=a,3=b,4=c,2=d"}));
}

TEST(Yrmh, AppendixEconomyJointCycle) {
  // c points to 1 and a points to 4, so 1 -> a -> 4 -> c -> 1 closes once 1
  // is promoted; 3 is left with nothing.
  const Economy e = fixture_economy("appendix-yrmh");
  const YrmhResult result = yrmh_run(e, parse_order(e, "4,1,2,3"));
  EXPECT_EQ(result.allocation, lit(e, "1=a,2=b,4=c"));
  EXPECT_EQ(render_trace(e, result.trace),
            "order: 4 1 2 3\n"
            "step 1: 4 points to c; promote 1\n"
            "step 2: 1 points to a; cycle (1,a) (4,c)\n"
            "step 3: b -> 2; 2 points to b; cycle (2,b)\n"
            "step 4: 3 points to null; 3 claims null\n");
  const auto refined = compute_core(e, CoreConcept::refined_exclusion);
  EXPECT_TRUE(refined.contains(result.allocation));
}

TEST(Yrmh, SingleAgentSingleObject) {
  const Economy e({"1"}, {"a"}, {{{0}}}, {AgentSet{0}});
  EXPECT_EQ(yrmh_all_outcomes(e), lits(e, {"1=a"}));
}

TEST(Yrmh, OwnFavoritesGiveIdentity) {
  const Economy e({"1", "2", "3"}, {"a", "b", "c"}, {{{0, 1, 2}}, {{1, 0, 2}}, {{2, 1, 0}}},
                  {AgentSet{0, 1}, AgentSet{1}, AgentSet{2}});
  for (const auto& order : all_orders(3)) EXPECT_EQ(yrmh_run(e, order).allocation, lit(e, "1=a,2=b,3=c"));
}

TEST(Yrmh, PublicOwnershipIsSerialDictatorship) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Economy e = testing::class_economy(seed, 4, 3, ClassLabel::public_ownership, 0.7);
    for (const auto& order : all_orders(4)) {
      EXPECT_EQ(yrmh_run(e, order).allocation, serial_dictatorship(e, order));
    }
  }
}

TEST(Yrmh, HousingMarketIsTopTradingCycles) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Economy e = testing::class_economy(seed, 4, 4, ClassLabel::housing_market);
    const Allocation ttc = top_trading_cycles(e);
    for (const auto& order : all_orders(4)) EXPECT_EQ(yrmh_run(e, order).allocation, ttc);
  }
}

TEST(Yrmh, OutcomesLieInRefinedExclusionCore) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Economy e = testing::random_economy(seed, 4, 3, 0.75);
    const CoreSet refined = compute_core(e, CoreConcept::refined_exclusion);
    for (const auto& a : yrmh_all_outcomes(e, SearchLimits{})) {
      EXPECT_TRUE(refined.contains(a)) << "seed " << seed;
      EXPECT_TRUE(pareto_efficient(e, a));
    }
  }
}

TEST(Yrmh, TraceReplayAndDeterminism) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Economy e = testing::random_economy(seed, 4, 4, 0.6);
    for (const auto& order : all_orders(4)) {
      const YrmhResult a = yrmh_run(e, order);
      const YrmhResult b = yrmh_run(e, order);
      EXPECT_EQ(a.trace, b.trace);
      EXPECT_EQ(replay_trace(e, a.trace), a.allocation);
      EXPECT_NO_THROW(validate_allocation(e, a.allocation));
    }
  }
}

TEST(Yrmh, InvalidOrdersAndCapacity) {
  const Economy e = fixture_economy("ex5");
  EXPECT_THROW(yrmh_run(e, PriorityOrder{{0, 1, 2}}), InputError);
  EXPECT_THROW(yrmh_run(e, PriorityOrder{{0, 1, 2, 2}}), InputError);
  EXPECT_THROW(yrmh_run(e, PriorityOrder{{0, 1, 2, 4}}), InputError);
  SearchLimits limits;
  limits.max_order_agents = 3;
  EXPECT_THROW(yrmh_all_outcomes(e, limits), CapacityError);
}

TEST(Yrmh, OutcomeSetIsCanonical) {
  const Economy e = fixture_economy("appendix-effective");
  const auto outcomes = yrmh_all_outcomes(e);
  EXPECT_TRUE(std::is_sorted(outcomes.begin(), outcomes.end()));
  EXPECT_EQ(std::adjacent_find(outcomes.begin(), outcomes.end()), outcomes.end());
}

}  // namespace
}  // namespace endow
