#include <gtest/gtest.h>

#include "endow/error.hpp"
#include "endow/reduction.hpp"
#include "endow/taxonomy.hpp"
#include "support.hpp"

namespace endow {
namespace {

using testing::agents;
using testing::fixture_economy;
using testing::lit;
using testing::lits;

int reduced_object(const ReducedEconomy& r, const Economy& original, const std::string& label) {
  return r.object_map[static_cast<std::size_t>(*original.find_object(label))];
}

TEST(Reductions, Example7RemovesAgent3) {
  const Economy e = fixture_economy("ex7");
  const ReducedEconomy r = reduce(e, lit(e, "1=a,3=b"), agents(e, "3"));
  EXPECT_EQ(r.economy.num_agents(), 2);
  EXPECT_EQ(r.economy.object_labels(), std::vector<std::string>{"a"});
  EXPECT_EQ(r.economy.owners(0), r.economy.all_agents());
}

TEST(Reductions, AppendixEffectiveRemovesAgents3And4) {
  const Economy e = fixture_economy("appendix-effective");
  const ReducedEconomy r = reduce(e, lit(e, "2=a,3=b,4=c"), agents(e, "3,4"));
  const int a = reduced_object(r, e, "a");
  ASSERT_GE(a, 0);
  EXPECT_EQ(r.economy.owners(a), agents(r.economy, "1"));
  EXPECT_TRUE(r.economy.endowment_of(agents(r.economy, "2")).empty());
}

TEST(Reductions, OrphanedObjectsBecomePublic) {
  // Agent 3 alone owns b and leaves with nothing.
  const Economy e({"1", "2", "3"}, {"a", "b"}, {{{0, 1}}, {{1, 0}}, {}}, {AgentSet{0}, AgentSet{2}});
  const ReducedEconomy r = reduce(e, lit(e, "1=a"), agents(e, "3"));
  EXPECT_EQ(r.economy.num_objects(), 2);
  EXPECT_EQ(r.economy.owners(reduced_object(r, e, "b")), r.economy.all_agents());
  EXPECT_EQ(r.economy.owners(reduced_object(r, e, "a")), agents(r.economy, "1"));
}

TEST(Reductions, RejectsInvalidRemovals) {
  const Economy e = fixture_economy("ex7");
  EXPECT_THROW(reduce(e, lit(e, "1=a,3=b"), AgentSet{}), InputError);
  EXPECT_THROW(reduce(e, lit(e, "1=a,3=b"), e.all_agents()), InputError);
  EXPECT_THROW(reduce(e, lit(e, "3=a"), agents(e, "3")), InputError);
}

TEST(Reductions, Example8Restriction) {
  const Economy e = fixture_economy("ex8");
  const Allocation sigma = lit(e, "1=a,2=b,4=c");
  const ReducedEconomy r = reduce(e, sigma, agents(e, "1"));
  EXPECT_EQ(restrict_allocation(r, sigma), lit(r.economy, "2=b,4=c"));
  EXPECT_EQ(extend_allocation(r, restrict_allocation(r, sigma)), sigma);
}

TEST(Reductions, Example7ExtensionIsInefficient) {
  const Economy e = fixture_economy("ex7");
  const ReducedEconomy r = reduce(e, lit(e, "1=a,3=b"), agents(e, "3"));
  const Allocation delta = extend_allocation(r, lit(r.economy, "2=a"));
  EXPECT_EQ(delta, lit(e, "2=a,3=b"));
  EXPECT_FALSE(pareto_efficient(e, delta));
}

TEST(Reductions, RestrictionPreservesEfficiencyAndRoundTrips) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Economy e = testing::random_economy(seed, 4, 3);
    for (const auto& mu : enumerate_allocations(e)) {
      const bool efficient = pareto_efficient(e, mu);
      e.all_agents().for_each_nonempty_subset([&](AgentSet removed) {
        if (removed == e.all_agents() || !is_self_enforcing(e, removed, mu)) return false;
        const ReducedEconomy r = reduce(e, mu, removed);
        const Allocation restricted = restrict_allocation(r, mu);
        EXPECT_NO_THROW(validate_allocation(r.economy, restricted));
        EXPECT_EQ(extend_allocation(r, restricted), mu);
        if (efficient) {
          EXPECT_TRUE(pareto_efficient(r.economy, restricted));
        }
        return false;
      });
    }
  }
}

TEST(Reductions, ConsistencyFixtures) {
  const Economy aug = fixture_economy("prop1-augmented");
  const ConsistencyVerdict ex = check_consistency(aug, Solution::exclusion, ConsistencyMode::weak);
  EXPECT_FALSE(ex.holds);
  ASSERT_TRUE(ex.counterexample.has_value());
  EXPECT_EQ(ex.counterexample->removed, agents(aug, "i*"));

  const Economy weak = fixture_economy("prop2-weakcore");
  const ConsistencyVerdict wv = check_consistency(weak, Solution::weak, ConsistencyMode::weak);
  EXPECT_FALSE(wv.holds);
  EXPECT_EQ(wv.counterexample->removed, agents(weak, "1"));

  for (const char* id : {"ex1", "ex2", "ex3", "ex6", "ex7", "ex8", "prop1-augmented", "prop2-weakcore"}) {
    EXPECT_TRUE(check_consistency(fixture_economy(id), Solution::strong, ConsistencyMode::full).holds) << id;
  }

  const Economy eff = fixture_economy("appendix-effective");
  const ConsistencyVerdict ev = check_consistency(eff, Solution::effective, ConsistencyMode::full);
  EXPECT_FALSE(ev.holds);
  EXPECT_EQ(ev.counterexample->removed, agents(eff, "3,4"));
  EXPECT_TRUE(check_consistency(eff, Solution::effective, ConsistencyMode::weak).holds);
}

TEST(Reductions, StrongConsistencyGeneralCounterexamples) {
  const Economy ex7 = fixture_economy("ex7");
  const ConsistencyVerdict v7 = check_strong_consistency_general(ex7, Solution::refined_exclusion);
  ASSERT_FALSE(v7.holds);
  EXPECT_EQ(v7.counterexample->mu, lit(ex7, "1=a,3=b"));
  EXPECT_EQ(v7.counterexample->removed, agents(ex7, "3"));
  EXPECT_TRUE(v7.counterexample->extra);
  const ReducedEconomy r7 = reduce(ex7, v7.counterexample->mu, v7.counterexample->removed);
  EXPECT_EQ(v7.counterexample->witness, lit(r7.economy, "2=a"));

  const Economy ex8 = fixture_economy("ex8");
  const ConsistencyVerdict v8 = check_strong_consistency_general(ex8, Solution::refined_exclusion);
  ASSERT_FALSE(v8.holds);
  EXPECT_EQ(v8.counterexample->removed, agents(ex8, "1"));
  const ReducedEconomy r8 = reduce(ex8, v8.counterexample->mu, v8.counterexample->removed);
  EXPECT_EQ(v8.counterexample->witness, restrict_allocation(r8, lit(ex8, "1=a,2=b,3=c")));

  const Economy single({"1"}, {"a"}, {{{0}}}, {AgentSet{0}});
  for (Solution s : {Solution::strong, Solution::refined_exclusion, Solution::yrmh}) {
    EXPECT_TRUE(check_strong_consistency_general(single, s).holds);
  }
}

TEST(Reductions, StrongConsistencyOnPrivatePublicEconomies) {
  const Economy ex6 = fixture_economy("ex6");
  for (Solution s : {Solution::exclusion, Solution::refined_exclusion, Solution::yrmh}) {
    EXPECT_TRUE(check_strong_consistency_e0(ex6, s).holds) << to_string(s);
  }
  const ConsistencyVerdict strong = check_strong_consistency_e0(ex6, Solution::strong);
  EXPECT_FALSE(strong.holds);
  EXPECT_EQ(strong.counterexample->mu, lit(ex6, "1=a,3=b,2=c,4=d"));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Economy pub = testing::class_economy(seed, 3, 3, ClassLabel::public_ownership);
    EXPECT_TRUE(check_strong_consistency_e0(pub, Solution::exclusion).holds);
  }
  EXPECT_THROW(check_strong_consistency_e0(fixture_economy("ex7"), Solution::exclusion), InputError);
}

TEST(Reductions, EmptySolutionIsVacuouslyConsistent) {
  const Economy ex1 = fixture_economy("ex1");
  ASSERT_TRUE(solve(ex1, Solution::strong).empty());
  for (ConsistencyMode mode : {ConsistencyMode::full, ConsistencyMode::weak, ConsistencyMode::strong_general}) {
    EXPECT_TRUE(check_consistency(ex1, Solution::strong, mode).holds);
  }
}

TEST(Reductions, SolutionNames) {
  for (Solution s : {Solution::weak, Solution::strong, Solution::exclusion, Solution::refined_exclusion,
                     Solution::effective, Solution::rectified, Solution::pareto, Solution::yrmh}) {
    EXPECT_EQ(parse_solution(to_string(s)), s);
  }
  for (ConsistencyMode m : {ConsistencyMode::full, ConsistencyMode::weak, ConsistencyMode::strong_general,
                            ConsistencyMode::strong_e0}) {
    EXPECT_EQ(parse_consistency_mode(to_string(m)), m);
  }
  EXPECT_EQ(solve(fixture_economy("ex6"), Solution::yrmh),
            lits(fixture_economy("ex6"), {"4=a,1=b,3=c,2=d", "1=a,3=b,4=c,2=d"}));
}

}  // namespace
}  // namespace endow
