#include <gtest/gtest.h>

#include <algorithm>

#include "endow/error.hpp"
#include "endow/reduction.hpp"
#include "endow/taxonomy.hpp"
#include "support.hpp"

namespace endow {
namespace {

using testing::fixture_economy;

bool labelled(const Economy& e, ClassLabel label) {
  const auto labels = classify(e);
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

// |ω(C)| ≤ |C| for every coalition, plus full acceptability.
bool no_redundant_oracle(const Economy& e) {
  if (!all_objects_acceptable(e)) return false;
  bool ok = true;
  e.all_agents().for_each_nonempty_subset([&](AgentSet c) {
    if (e.endowment_of(c).size() > c.size()) ok = false;
    return !ok;
  });
  return ok;
}

TEST(Taxonomy, FixtureLabels) {
  const Economy ex2 = fixture_economy("ex2");
  EXPECT_TRUE(labelled(ex2, ClassLabel::no_redundant_ownership));
  EXPECT_TRUE(labelled(ex2, ClassLabel::no_overlapping_ownership));
  EXPECT_FALSE(labelled(ex2, ClassLabel::private_public_ownership));

  const Economy ex6 = fixture_economy("ex6");
  EXPECT_TRUE(labelled(ex6, ClassLabel::private_public_ownership));
  EXPECT_FALSE(labelled(ex6, ClassLabel::private_ownership));
  const Economy ex6b = fixture_economy("ex6-augmented");
  EXPECT_TRUE(labelled(ex6b, ClassLabel::private_ownership));

  EXPECT_TRUE(labelled(fixture_economy("prop1-housing"), ClassLabel::housing_market));
  EXPECT_TRUE(labelled(fixture_economy("prop1-augmented"), ClassLabel::augmented_housing_market));
}

TEST(Taxonomy, PublicOwnershipLabels) {
  const Economy e({"1", "2"}, {"a", "b"}, {{{0, 1}}, {{1}}}, {AgentSet{0, 1}, AgentSet{0, 1}});
  EXPECT_EQ(classify(e), (std::vector<ClassLabel>{ClassLabel::public_ownership, ClassLabel::private_public_ownership}));
  const Economy full({"1", "2"}, {"a", "b"}, {{{0, 1}}, {{1, 0}}}, {AgentSet{0, 1}, AgentSet{0, 1}});
  EXPECT_TRUE(labelled(full, ClassLabel::house_allocation));
}

TEST(Taxonomy, NoRedundantMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Economy e = testing::random_economy(seed, 1 + static_cast<int>(seed % 5), static_cast<int>(seed % 4),
                                              seed % 3 == 0 ? 1.0 : 0.8);
    EXPECT_EQ(has_label(e, ClassLabel::no_redundant_ownership), no_redundant_oracle(e)) << seed;
  }
}

TEST(Taxonomy, AugmentHousingMarket) {
  const Economy two({"1", "2"}, {"a", "b"}, {{{1, 0}}, {{0, 1}}}, {AgentSet{0}, AgentSet{1}});
  const Economy aug = augment_housing_market(two);
  EXPECT_EQ(aug.num_agents(), 3);
  EXPECT_EQ(aug.agent_label(2), "i*");
  EXPECT_TRUE(aug.preference(2).ranking.empty());
  for (int o = 0; o < aug.num_objects(); ++o) EXPECT_EQ(aug.owners(o).size(), 2);
  EXPECT_TRUE(has_label(aug, ClassLabel::augmented_housing_market));
  EXPECT_THROW(augment_housing_market(fixture_economy("ex2")), InputError);
  EXPECT_EQ(augment_housing_market(fixture_economy("prop1-housing")), fixture_economy("prop1-augmented"));
}

TEST(Taxonomy, AugmentPrivatePublic) {
  const Economy aug = augment_private_public(fixture_economy("ex6"));
  EXPECT_TRUE(testing::same_structure(aug, fixture_economy("ex6-augmented")));
  EXPECT_EQ(aug.agent_label(4), "i*");

  const Economy priv({"1", "2"}, {"a", "b"}, {{{0}}, {{1}}}, {AgentSet{0}, AgentSet{1}});
  const Economy p = augment_private_public(priv);
  EXPECT_EQ(p.num_agents(), 3);
  EXPECT_TRUE(p.endowment_of(AgentSet::single(2)).empty());

  const Economy pub({"1", "2"}, {"a"}, {{{0}}, {{0}}}, {AgentSet{0, 1}});
  const Economy q = augment_private_public(pub);
  EXPECT_EQ(q.owners(0), AgentSet::single(2));
  EXPECT_THROW(augment_private_public(fixture_economy("ex2")), InputError);
}

TEST(Taxonomy, AugmentThenReduceRoundTrips) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Economy e = testing::class_economy(seed, 3, 3, ClassLabel::private_public_ownership);
    const Economy aug = augment_private_public(e);
    const int star = aug.num_agents() - 1;
    const ReducedEconomy r = reduce(aug, Allocation::empty(aug.num_agents()), AgentSet::single(star));
    EXPECT_EQ(r.economy, e) << seed;

    const Economy h = testing::class_economy(seed, 3, 3, ClassLabel::housing_market);
    const Economy hstar = augment_housing_market(h);
    const ReducedEconomy rh = reduce(hstar, Allocation::empty(hstar.num_agents()), AgentSet::single(3));
    EXPECT_EQ(rh.economy, h) << seed;
  }
}

TEST(Taxonomy, FreshLabelAvoidsCollisions) {
  const Economy e({"i*", "i**"}, {"a"}, {{}, {}}, {AgentSet{0}});
  EXPECT_EQ(fresh_agent_label(e), "i***");
}

TEST(Taxonomy, SingleAgentHasNoPublicObjects) {
  const Economy e({"1"}, {"a"}, {{{0}}}, {AgentSet{0}});
  EXPECT_TRUE(public_objects(e).empty());
  EXPECT_TRUE(has_label(e, ClassLabel::private_ownership));
}

TEST(Taxonomy, NamesRoundTrip) {
  for (ClassLabel l : kAllClassLabels) EXPECT_EQ(parse_class_label(to_string(l)), l);
  EXPECT_EQ(to_string(ClassLabel::private_public_ownership), "private-public-ownership");
}

}  // namespace
}  // namespace endow
