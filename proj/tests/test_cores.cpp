#include <gtest/gtest.h>

#include "endow/cores.hpp"
#include "endow/error.hpp"
#include "support.hpp"

namespace endow {
namespace {

using testing::fixture_economy;
using testing::lits;

std::vector<Allocation> core(const Economy& e, CoreConcept kind) { return compute_core(e, kind).members; }

TEST(CoreSolvers, Example1) {
  const Economy e = fixture_economy("ex1");
  EXPECT_EQ(core(e, CoreConcept::weak), lits(e, {"1=a", "1=a,2=b", "1=a,3=b"}));
  EXPECT_TRUE(core(e, CoreConcept::strong).empty());
  EXPECT_EQ(core(e, CoreConcept::exclusion), lits(e, {"1=a,2=b", "1=a,3=b"}));
  EXPECT_FALSE(core(e, CoreConcept::refined_exclusion).empty());
}

TEST(CoreSolvers, Example2) {
  const Economy e = fixture_economy("ex2");
  EXPECT_EQ(core(e, CoreConcept::weak), lits(e, {"1=a", "2=a", "3=a", ""}));
  EXPECT_EQ(core(e, CoreConcept::strong), lits(e, {"1=a", "2=a"}));
  EXPECT_EQ(core(e, CoreConcept::exclusion), lits(e, {"1=a", "2=a", "3=a"}));
  EXPECT_FALSE(compute_core(e, CoreConcept::refined_exclusion).contains(testing::lit(e, "3=a")));
}

TEST(CoreSolvers, Example3) {
  const Economy e = fixture_economy("ex3");
  EXPECT_EQ(core(e, CoreConcept::strong), lits(e, {"1=a,2=b", "2=a,1=b"}));
  EXPECT_EQ(core(e, CoreConcept::exclusion), lits(e, {"1=a,2=b", "2=a,1=b", "1=a,3=b"}));
  EXPECT_EQ(core(e, CoreConcept::refined_exclusion), lits(e, {"1=a,2=b", "2=a,1=b"}));
}

TEST(CoreSolvers, Example6) {
  const Economy e = fixture_economy("ex6");
  const auto sigmas = lits(e, {"4=a,1=b,3=c,2=d", "1=a,3=b,4=c,2=d"});
  const auto with_mu = lits(e, {"1=a,3=b,2=c,4=d", "4=a,1=b,3=c,2=d", "1=a,3=b,4=c,2=d"});
  EXPECT_EQ(core(e, CoreConcept::strong), with_mu);
  EXPECT_EQ(core(e, CoreConcept::exclusion), sigmas);
  EXPECT_EQ(core(e, CoreConcept::refined_exclusion), sigmas);
  EXPECT_EQ(core(e, CoreConcept::rectified), with_mu);
}

TEST(CoreSolvers, Example7) {
  const Economy e = fixture_economy("ex7");
  EXPECT_EQ(core(e, CoreConcept::refined_exclusion), lits(e, {"1=a,3=b", "3=a,2=b"}));
}

TEST(CoreSolvers, DiagnosticsWitnessEveryExclusion) {
  for (const char* id : {"ex1", "ex2", "ex3", "ex6", "appendix-effective"}) {
    const Economy e = fixture_economy(id);
    const BlockFinder finder(e);
    for (CoreConcept kind : kAllCoreConcepts) {
      const CoreSet set = compute_core(finder, kind, true);
      EXPECT_EQ(set.members.size() + set.excluded.size(), finder.allocations().size()) << id;
      for (const auto& ex : set.excluded) {
        if (kind == CoreConcept::pareto) {
          EXPECT_TRUE(pareto_dominates(e, ex.certificate.alternative, ex.allocation));
        } else {
          EXPECT_TRUE(verify_certificate(e, ex.allocation, ex.certificate));
        }
      }
      EXPECT_EQ(set, compute_core(finder, kind, false));
    }
  }
}

TEST(CoreSolvers, InclusionReportExamples) {
  const Economy ex1 = fixture_economy("ex1");
  const InclusionReport r1 = inclusion_report(ex1);
  EXPECT_EQ(r1.relation(CoreConcept::strong, CoreConcept::refined_exclusion).relation, SetRelation::subset);

  const Economy ex6 = fixture_economy("ex6");
  const PairRelation rel = inclusion_report(ex6).relation(CoreConcept::strong, CoreConcept::refined_exclusion);
  EXPECT_EQ(rel.relation, SetRelation::superset);
  ASSERT_TRUE(rel.only_left.has_value());
  EXPECT_EQ(*rel.only_left, testing::lit(ex6, "1=a,3=b,2=c,4=d"));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Economy pub = testing::class_economy(seed, 3, 3, ClassLabel::public_ownership);
    const InclusionReport r = inclusion_report(pub);
    for (CoreConcept kind : {CoreConcept::strong, CoreConcept::exclusion, CoreConcept::refined_exclusion}) {
      EXPECT_EQ(r.relation(kind, CoreConcept::pareto).relation, SetRelation::equal);
    }
  }
}

TEST(CoreSolvers, CompareSets) {
  const Economy e = fixture_economy("ex2");
  const auto a = lits(e, {"1=a", "2=a"});
  const auto b = lits(e, {"1=a", "2=a", "3=a"});
  const auto c = lits(e, {"3=a"});
  EXPECT_EQ(compare_sets(CoreConcept::strong, a, CoreConcept::exclusion, b).relation, SetRelation::subset);
  EXPECT_EQ(compare_sets(CoreConcept::exclusion, b, CoreConcept::strong, a).relation, SetRelation::superset);
  EXPECT_EQ(compare_sets(CoreConcept::strong, a, CoreConcept::strong, a).relation, SetRelation::equal);
  const PairRelation inc = compare_sets(CoreConcept::strong, a, CoreConcept::weak, c);
  EXPECT_EQ(inc.relation, SetRelation::incomparable);
  EXPECT_TRUE(inc.only_left && inc.only_right);
  EXPECT_TRUE(is_subset({}, a));
}

TEST(CoreSolvers, NamesRoundTrip) {
  for (CoreConcept kind : kAllCoreConcepts) EXPECT_EQ(parse_core_concept(to_string(kind)), kind);
  EXPECT_EQ(to_string(CoreConcept::refined_exclusion), "refined-exclusion");
  EXPECT_FALSE(defining_block(CoreConcept::pareto).has_value());
  EXPECT_EQ(defining_block(CoreConcept::weak), BlockingConcept::strong);
  EXPECT_EQ(defining_block(CoreConcept::strong), BlockingConcept::weak);
}

TEST(CoreSolvers, CapacityBound) {
  SearchLimits limits;
  limits.max_agents = 2;
  EXPECT_THROW(compute_core(fixture_economy("ex1"), CoreConcept::strong, false, limits), CapacityError);
}

TEST(CoreSolvers, LatticeOnRandomEconomies) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Economy e = testing::random_economy(seed, 2 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 3));
    const InclusionReport r = inclusion_report(e);
    auto members = [&](CoreConcept k) { return r.core(k).members; };
    EXPECT_TRUE(is_subset(members(CoreConcept::refined_exclusion), members(CoreConcept::exclusion)));
    EXPECT_TRUE(is_subset(members(CoreConcept::refined_exclusion), members(CoreConcept::rectified)));
    EXPECT_TRUE(is_subset(members(CoreConcept::strong), members(CoreConcept::rectified)));
    EXPECT_TRUE(is_subset(members(CoreConcept::rectified), members(CoreConcept::effective)));
    EXPECT_TRUE(is_subset(members(CoreConcept::effective), members(CoreConcept::weak)));
    EXPECT_FALSE(members(CoreConcept::refined_exclusion).empty());
    for (CoreConcept k : {CoreConcept::exclusion, CoreConcept::refined_exclusion, CoreConcept::effective,
                          CoreConcept::rectified, CoreConcept::strong}) {
      EXPECT_TRUE(is_subset(members(k), members(CoreConcept::pareto))) << to_string(k);
    }
  }
}

}  // namespace
}  // namespace endow
