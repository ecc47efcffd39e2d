#include <gtest/gtest.h>

#include "epsnc/eps_lattice.hpp"
#include "epsnc/errors.hpp"

namespace epsnc {
namespace {

const EpsilonMatrix kOnly23({1, 2, 3, 4}, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}});

TEST(EpsLattice, TwoElementsFormAChain) {
  for (const auto& eps : all_epsilon_matrices({1, 2})) {
    const EpsLattice lattice(Decoration{1, 2}, eps);
    ASSERT_EQ(lattice.size(), 2U);
    EXPECT_EQ(lattice.cover_relations().size(), 1U);
  }
}

TEST(EpsLattice, FullPartitionLatticeOnThree) {
  const EpsLattice lattice(Decoration{1, 2, 3}, EpsilonMatrix::uniform({1, 2, 3}, true, false));
  EXPECT_EQ(lattice.size(), 5U);
  EXPECT_EQ(lattice.cover_relations().size(), 6U);
}

TEST(EpsLattice, JoinMayDifferFromPartitionJoin) {
  const EpsLattice lattice(Decoration{1, 2, 3, 4}, kOnly23);
  EXPECT_EQ(lattice.size(), 15U);
  const auto a = lattice.index_of(SetPartition::from_blocks(4, {{1, 3}, {2}, {4}}));
  const auto b = lattice.index_of(SetPartition::from_blocks(4, {{1}, {2, 4}, {3}}));
  EXPECT_EQ(join(lattice.element(a), lattice.element(b)).to_string(), "{1,3}{2,4}");
  EXPECT_EQ(lattice.element(lattice.join(a, b)).to_string(), "{1,3}{2,4}");

  const auto c = lattice.index_of(SetPartition::from_blocks(4, {{1, 3}, {2}, {4}}));
  const auto d = lattice.index_of(SetPartition::from_blocks(4, {{1}, {2}, {3}, {4}}));
  EXPECT_EQ(lattice.join(c, d), c);
  EXPECT_EQ(lattice.meet(c, d), d);
}

TEST(EpsLattice, NoncrossingJoinCanBeTop) {
  const EpsilonMatrix free4 = EpsilonMatrix::uniform({1, 2, 3, 4}, false, false);
  const EpsLattice lattice(Decoration{1, 2, 3, 4}, free4);
  const auto a = lattice.index_of(SetPartition::from_blocks(4, {{1, 3}, {2}, {4}}));
  const auto b = lattice.index_of(SetPartition::from_blocks(4, {{1}, {2, 4}, {3}}));
  EXPECT_EQ(lattice.element(lattice.join(a, b)), SetPartition::coarsest(4));
}

TEST(EpsLattice, MeetAndJoinOnDecoratedPartitions) {
  const Decoration d{1, 2, 3, 4};
  const DecoratedPartition a(SetPartition::from_blocks(4, {{1, 3}, {2}, {4}}), d);
  const DecoratedPartition b(SetPartition::from_blocks(4, {{1}, {2, 4}, {3}}), d);
  EXPECT_EQ(join_eps(a, b, kOnly23).partition.to_string(), "{1,3}{2,4}");
  EXPECT_EQ(meet_eps(a, b, kOnly23).partition, SetPartition::finest(4));
  const DecoratedPartition other(SetPartition::finest(4), Decoration{1, 2, 4, 3});
  EXPECT_THROW(meet_eps(a, other, kOnly23), InvalidArgument);
  const DecoratedPartition crossing(SetPartition::from_blocks(4, {{1, 3}, {2, 4}}), d);
  EXPECT_THROW(join_eps(crossing, a, EpsilonMatrix::uniform({1, 2, 3, 4}, false, false)), InvalidArgument);
}

TEST(Grouping, CutsAndGroups) {
  const auto g = Grouping::from_cuts(5, {2, 4});
  EXPECT_EQ(g.group_count(), 3);
  EXPECT_EQ(g.group_of(1), 1);
  EXPECT_EQ(g.group_of(3), 2);
  EXPECT_EQ(g.group_of(5), 3);
  EXPECT_EQ(g.group_mask(2), Mask{0b01100});
  EXPECT_THROW(Grouping::from_cuts(5, {4, 2}), InvalidArgument);
  EXPECT_THROW(Grouping::from_cuts(5, {5}), InvalidArgument);
  EXPECT_EQ(Grouping::trivial(4).group_count(), 4);
}

TEST(Grouping, LabelConstantGroupingsRespectLabelChanges) {
  const auto groupings = label_constant_groupings(Decoration{1, 1, 2, 2});
  EXPECT_EQ(groupings.size(), 4U);
  for (const auto& g : groupings) {
    const auto cuts = g.cuts();
    EXPECT_NE(std::find(cuts.begin(), cuts.end(), 2), cuts.end());
  }
  EXPECT_THROW(group_labels(Decoration{1, 2}, Grouping::from_cuts(2, {})), InvalidArgument);
  EXPECT_EQ(group_labels(Decoration{1, 1, 2}, Grouping::from_cuts(3, {2})), (Decoration{1, 2}));
}

TEST(Grouping, LiftInverseImage) {
  const auto g = Grouping::from_cuts(4, {1, 3});  // groups {1}, {2,3}, {4}
  const DecoratedPartition gamma(SetPartition::from_blocks(3, {{1, 3}, {2}}), Decoration{1, 2, 1});
  const auto lifted = lift_inverse_image(gamma, g);
  EXPECT_EQ(lifted.partition.to_string(), "{1,4}{2,3}");
  EXPECT_EQ(lifted.decoration, (Decoration{1, 2, 2, 1}));
}

TEST(Grouping, JoinCondition) {
  const EpsilonMatrix eps({1, 2}, {{0, 1}, {1, 0}});
  const auto g = Grouping::from_cuts(4, {2});  // groups {1,2}, {3,4}
  const Decoration fine{1, 1, 2, 2};
  const DecoratedPartition top(SetPartition::coarsest(2), Decoration{1, 2});
  const DecoratedPartition bottom(SetPartition::finest(2), Decoration{1, 2});
  const DecoratedPartition phi(SetPartition::from_blocks(4, {{1, 3}, {2}, {4}}), fine);
  EXPECT_TRUE(join_condition(phi, g, top, eps));
  EXPECT_FALSE(join_condition(phi, g, bottom, eps));
  const DecoratedPartition within(SetPartition::from_blocks(4, {{1}, {2}, {3, 4}}), fine);
  EXPECT_TRUE(join_condition(within, g, bottom, eps));
}

}  // namespace
}  // namespace epsnc
