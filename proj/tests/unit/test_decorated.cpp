#include <gtest/gtest.h>

#include <set>

#include "epsnc/decorated.hpp"
#include "epsnc/errors.hpp"

namespace epsnc {
namespace {

TEST(EpsilonMatrix, ValidatesShapeAndSymmetry) {
  EXPECT_NO_THROW(EpsilonMatrix({1, 2}, {{0, 1}, {1, 1}}));
  EXPECT_THROW(EpsilonMatrix({1, 2}, {{0, 1}, {0, 0}}), InvalidArgument);
  EXPECT_THROW(EpsilonMatrix({1, 2}, {{0, 2}, {2, 0}}), InvalidArgument);
  EXPECT_THROW(EpsilonMatrix({1, 2}, {{0, 1}}), InvalidArgument);
  EXPECT_THROW(EpsilonMatrix({1, 1}, {{0, 0}, {0, 0}}), InvalidArgument);
}

TEST(EpsilonMatrix, Lookup) {
  const EpsilonMatrix eps({3, 7}, {{1, 0}, {0, 0}});
  EXPECT_TRUE(eps(3, 3));
  EXPECT_FALSE(eps(3, 7));
  EXPECT_FALSE(eps(7, 7));
  EXPECT_THROW((void)eps(3, 4), InvalidArgument);
  EXPECT_THROW(eps.validate(Decoration{3, 4}), InvalidArgument);
  EXPECT_NO_THROW(eps.validate(Decoration{7, 3, 7}));
}

TEST(EpsilonMatrix, TwoLabelFamilyHasEightSymmetricMembers) {
  const auto all = all_epsilon_matrices({1, 2});
  EXPECT_EQ(all.size(), 8U);
  std::set<std::vector<std::vector<int>>> distinct;
  for (const auto& m : all) distinct.insert(m.rows());
  EXPECT_EQ(distinct.size(), 8U);
  EXPECT_EQ(all_epsilon_matrices({1, 2, 3}).size(), 64U);
}

TEST(Decoration, RestrictAndTranspose) {
  const Decoration d{1, 2, 3, 1};
  EXPECT_EQ(d.restrict_standardize(0b1010), (Decoration{2, 1}));
  EXPECT_EQ(d.transposed(2), (Decoration{1, 3, 2, 1}));
  EXPECT_EQ(d.to_string(), "(1,2,3,1)");
}

TEST(DecoratedPartition, SizesMustAgree) {
  EXPECT_THROW(DecoratedPartition(SetPartition::finest(3), Decoration{1, 2}), InvalidArgument);
  const DecoratedPartition dp(SetPartition::from_blocks(3, {{1, 3}, {2}}), Decoration{1, 2, 1});
  EXPECT_EQ(dp.to_string(), "{1_1,3_1}{2_2}");
  EXPECT_EQ(restrict_standardize(dp, 0b110).to_string(), "{1_2}{2_1}");
}

}  // namespace
}  // namespace epsnc
