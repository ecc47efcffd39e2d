// Small hand-checked cases across modules.

#include <gtest/gtest.h>

#include "epsnc/cumulants.hpp"
#include "epsnc/eps_lattice.hpp"
#include "epsnc/identities.hpp"
#include "epsnc/models.hpp"
#include "epsnc/oracles.hpp"
#include "epsnc/verification.hpp"

namespace epsnc {
namespace {

SetPartition blocks(int n, const std::vector<std::vector<int>>& b) { return SetPartition::from_blocks(n, b); }

const Decoration kDistinct{1, 2, 3, 4};
const EpsilonMatrix kOnly23({1, 2, 3, 4}, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}});

TEST(WorkedExamples, PartitionsOfThree) {
  std::vector<std::string> names;
  for (const auto& p : enumerate_partitions(3)) names.push_back(p.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"{1,2,3}", "{1,2}{3}", "{1,3}{2}", "{1}{2,3}", "{1}{2}{3}"}));
  for (const auto& p : enumerate_partitions(3)) EXPECT_TRUE(is_noncrossing(p));
}

TEST(WorkedExamples, PartitionOperations) {
  EXPECT_EQ(restrict_standardize(blocks(4, {{1, 3}, {2, 4}}), std::vector<int>{1, 2, 3}).to_string(), "{1,3}{2}");
  EXPECT_FALSE(refines(blocks(3, {{1, 3}, {2}}), blocks(3, {{1, 2}, {3}})));
  EXPECT_EQ(meet(blocks(4, {{1, 3}, {2, 4}}), blocks(4, {{1, 2}, {3, 4}})), SetPartition::finest(4));
  EXPECT_EQ(join(blocks(3, {{1}, {2, 3}}), blocks(3, {{1, 2}, {3}})), SetPartition::coarsest(3));
  EXPECT_EQ(kernel(std::vector<int>{1, 2, 1, 2}).to_string(), "{1,3}{2,4}");
  EXPECT_EQ(kernel(std::vector<int>{5, 5, 5}), SetPartition::coarsest(3));
  EXPECT_EQ(kernel(std::vector<int>{3, 1, 2}), SetPartition::finest(3));
}

TEST(WorkedExamples, MovesOnTheCrossingPair) {
  const DecoratedPartition gamma(blocks(4, {{1, 3}, {2, 4}}), kDistinct);
  EXPECT_TRUE(is_allowed_move(gamma, 2, kOnly23));
  const auto moved = apply_move(gamma, 2, kOnly23);
  EXPECT_EQ(moved.partition.to_string(), "{1,2}{3,4}");
  EXPECT_EQ(moved.decoration, (Decoration{1, 3, 2, 4}));
  EXPECT_EQ(apply_move(moved, 2, kOnly23), gamma);

  const EpsilonMatrix only12({1, 2, 3, 4}, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  const auto other = apply_move(gamma, 1, only12);
  EXPECT_EQ(other.partition.to_string(), "{1,4}{2,3}");
  EXPECT_EQ(other.decoration, (Decoration{2, 1, 3, 4}));
}

TEST(WorkedExamples, Orbits) {
  const DecoratedPartition gamma(blocks(4, {{1, 3}, {2, 4}}), kDistinct);
  EXPECT_EQ(allowed_orbit(gamma, kOnly23).size(), 2U);
  EXPECT_EQ(allowed_orbit(gamma, EpsilonMatrix::uniform({1, 2, 3, 4}, false, false)).size(), 1U);
  // Swapping two singletons with equal labels reproduces the same decorated partition.
  const DecoratedPartition singletons(SetPartition::finest(2), Decoration{1, 1});
  const EpsilonMatrix classical({1}, {{1}});
  EXPECT_TRUE(is_allowed_move(singletons, 1, classical));
  EXPECT_EQ(allowed_orbit(singletons, classical).size(), 1U);
}

TEST(WorkedExamples, Admissibility) {
  EXPECT_FALSE(in_admissible(std::vector<int>{1, 1}, EpsilonMatrix({1}, {{0}})));
  EXPECT_TRUE(in_admissible(std::vector<int>{1, 2, 1}, EpsilonMatrix({1, 2}, {{0, 0}, {0, 0}})));
  EXPECT_FALSE(in_admissible(std::vector<int>{1, 2, 1}, EpsilonMatrix({1, 2}, {{0, 1}, {1, 0}})));
}

TEST(WorkedExamples, LatticeIdentities) {
  const EpsilonMatrix free4 = EpsilonMatrix::uniform({1, 2, 3, 4}, false, false);
  const DecoratedPartition a(blocks(4, {{1, 3}, {2}, {4}}), kDistinct);
  const DecoratedPartition b(blocks(4, {{1}, {2, 4}, {3}}), kDistinct);
  const DecoratedPartition top(SetPartition::coarsest(4), kDistinct);
  EXPECT_EQ(join_eps(a, b, free4), top);
  EXPECT_EQ(join_eps(a, top, free4), top);
  EXPECT_EQ(meet_eps(a, a, free4), a);
}

TEST(WorkedExamples, LiftInverseImage) {
  const auto halves = Grouping::from_cuts(4, {2});
  EXPECT_EQ(lift_inverse_image(DecoratedPartition(SetPartition::finest(2), Decoration{1, 2}), halves).partition
                .to_string(),
            "{1,2}{3,4}");
  EXPECT_EQ(lift_inverse_image(DecoratedPartition(SetPartition::coarsest(2), Decoration{1, 2}), halves).partition,
            SetPartition::coarsest(4));
  const auto g = Grouping::from_cuts(4, {1, 2});
  EXPECT_EQ(lift_inverse_image(DecoratedPartition(blocks(3, {{1}, {2, 3}}), Decoration{1, 1, 1}), g)
                .partition.to_string(),
            "{1}{2,3,4}");
}

TEST(WorkedExamples, JoinConditionCases) {
  const EpsilonMatrix eps({1, 2}, {{0, 1}, {1, 0}});
  const auto g = Grouping::from_cuts(4, {2});
  const Decoration fine{1, 1, 2, 2};
  const DecoratedPartition top(SetPartition::coarsest(2), Decoration{1, 2});
  const DecoratedPartition bottom(SetPartition::finest(2), Decoration{1, 2});
  EXPECT_TRUE(join_condition(lift_inverse_image(top, g), g, top, eps));
  EXPECT_TRUE(join_condition(DecoratedPartition(SetPartition::finest(4), fine), g, bottom, eps));
  EXPECT_TRUE(join_condition(DecoratedPartition(blocks(4, {{1, 3}, {2, 4}}), fine), g, top, eps));
}

TEST(WorkedExamples, TensorSemicircularPairings) {
  const auto tensor = bundled_models()[9].model;
  ASSERT_EQ(bundled_models()[9].name, "semicircular-tensor");
  const Word w = word_from_labels(std::vector<int>{1, 2, 1, 2});
  const auto crossing = blocks(4, {{1, 3}, {2, 4}});
  EXPECT_EQ(phi_on_partition(*tensor, crossing, w), 1);
  EXPECT_EQ(cumulant_on_partition(*tensor, DecoratedPartition(crossing, decoration_of(w)), w, tensor->eps()), 1);
  EXPECT_EQ(phi_on_partition(*tensor, SetPartition::coarsest(4), w), tensor->moment(w));
  EXPECT_EQ(phi_on_partition(*tensor, SetPartition::finest(4), w), 0);
}

TEST(WorkedExamples, UnitNextToALetter) {
  RandomFunctional phi(8);
  const EpsilonMatrix eps({1, 2}, {{0, 1}, {1, 0}});
  EXPECT_EQ(cumulant(phi, Word{{1, 0}, Letter::unit(2)}, eps), 0);
  EXPECT_EQ(cumulant(phi, Word{Letter::unit(1), {2, 0}}, eps), 0);
  EXPECT_EQ(cumulant(phi, Word{{1, 0}}, eps), phi.moment(Word{{1, 0}}));
}

TEST(WorkedExamples, GroupingTheoremCases) {
  const auto tensor = bundled_models()[9].model;
  const Word w = word_from_labels(std::vector<int>{1, 1, 2, 2});
  const auto top = DecoratedPartition(SetPartition::coarsest(2), Decoration{1, 2});
  const auto sides = theorem8_check(*tensor, w, Grouping::from_cuts(4, {2}), top, tensor->eps());
  EXPECT_EQ(sides.lhs, 0);
  EXPECT_EQ(sides.rhs, 0);

  const ModelFunctional single(EpsilonMatrix({1}, {{0}}), {{1, {{2, Rational(1)}, {3, Rational(1)}}}});
  const auto cubic = theorem8_check(single, word_from_labels(std::vector<int>{1, 1, 1}), Grouping::from_cuts(3, {2}),
                                    DecoratedPartition(SetPartition::coarsest(2), Decoration{1, 1}), single.eps());
  EXPECT_EQ(cubic.lhs, 1);
  EXPECT_EQ(cubic.rhs, 1);

  RandomFunctional phi(23);
  const EpsilonMatrix eps({1, 2}, {{1, 0}, {0, 0}});
  const Word x = parse_word("1,2,1,2");
  for (const auto& gamma : enumerate_eps_nc(decoration_of(x), eps)) {
    const auto trivial = theorem8_check(phi, x, Grouping::trivial(4), gamma, eps);
    EXPECT_EQ(trivial.lhs, trivial.rhs);
  }
}

TEST(WorkedExamples, Centering) {
  const ModelFunctional model(EpsilonMatrix({1, 2}, {{1, 1}, {1, 0}}),
                              {{1, {{1, Rational(2)}, {2, Rational(1)}}}, {2, {{1, Rational(-1, 3)}, {2, Rational(5)}}}});
  EXPECT_EQ(centered_expand(model, Word{{1, 0}}), 0);
  const Word pair = word_from_labels(std::vector<int>{1, 2});
  EXPECT_EQ(centered_expand(model, pair),
            model.moment(pair) - model.moment(Word{{1, 0}}) * model.moment(Word{{2, 0}}));
  const ModelFunctional centered(EpsilonMatrix({1}, {{0}}), {{1, {{2, Rational(1)}, {4, Rational(3)}}}});
  const Word x4(4, Letter{1, 0});
  EXPECT_EQ(centered_expand(centered, x4), centered.moment(x4));
}

TEST(WorkedExamples, PointMassCumulants) {
  const std::vector<Rational> ones(6, Rational(1));
  const auto k = oracles::classical_cumulants(ones);
  EXPECT_EQ(k.front(), 1);
  for (std::size_t i = 1; i < k.size(); ++i) EXPECT_EQ(k[i], 0);
}

TEST(WorkedExamples, SingleLabelCumulantOfAModel) {
  const auto model = bundled_models()[0].model;
  CumulantEngine engine(*model, model->eps());
  EXPECT_EQ(engine.cumulant(Word(3, Letter{1, 0})), model->algebra(1).kappa(3));
  EXPECT_EQ(engine.cumulant(word_from_labels(std::vector<int>{1, 2})), 0);
}

}  // namespace
}  // namespace epsnc
