#include <gtest/gtest.h>

#include <random>

#include "linwitt/shifted_sums.hpp"
#include "support/generators.hpp"
#include "support/lattice_oracle.hpp"

using namespace linwitt;

namespace {

AbelianGroup from_oracle(const oracle::Cokernel& c) {
  return AbelianGroup::from_cyclic_orders(static_cast<std::int64_t>(c.free_rank), c.torsion);
}

}  // namespace

TEST(AbelianGroup, NormalForm) {
  const auto g = AbelianGroup::from_cyclic_orders(0, {4, 2, 1, 8, 2});
  EXPECT_EQ(g.torsion(), (std::vector<std::int64_t>{2, 2, 4, 8}));
  EXPECT_EQ(g.exponent(), 8);
  EXPECT_EQ(g.order(), 128);
  EXPECT_EQ(g.to_string(), "(Z/2)^2 + Z/4 + Z/8");
  EXPECT_EQ(AbelianGroup::from_cyclic_orders(0, {6}), AbelianGroup::from_cyclic_orders(0, {2, 3}));
  EXPECT_EQ(AbelianGroup::from_cyclic_orders(2, {}).to_string(), "Z^2");
  EXPECT_EQ(AbelianGroup::trivial().to_string(), "0");
  EXPECT_EQ(AbelianGroup::from_cyclic_orders(1, {3}).exponent(), 0);
  EXPECT_THROW(AbelianGroup::from_cyclic_orders(0, {0}), Error);
}

TEST(ShiftedSums, Evaluation) {
  const ShiftedIdealSum gm{{0, 1}, {1, 1}};
  EXPECT_EQ(render_evaluation(evaluate(gm, 0)), "Z + Z");
  EXPECT_EQ(render_evaluation(evaluate(gm, 1)), "2Z + Z");
  EXPECT_EQ(render_evaluation(evaluate(gm, 3)), "8Z + 4Z");
  EXPECT_EQ(render_evaluation(evaluate(ShiftedIdealSum{{2, 3}}, 4)), "(4Z)^3");
  EXPECT_EQ(render_evaluation(evaluate(ShiftedIdealSum{}, 4)), "0");
  EXPECT_THROW(ShiftedIdealSum({{0, 0}}), Error);
}

TEST(ShiftedSums, GmSequence) {
  // H^0(Gm, I^j) = I^j + I^{j-1}
  const ShiftedIdealSum gm{{0, 1}, {1, 1}};
  const auto at0 = step_verdict(gm, 0);
  EXPECT_EQ(at0.kind, StepKind::InjectiveNotSurjective);
  EXPECT_EQ(at0.cokernel, AbelianGroup::from_cyclic_orders(0, {2}));
  for (int j = 1; j <= 6; ++j) EXPECT_EQ(step_verdict(gm, j).kind, StepKind::Iso);
  EXPECT_EQ(cokernel_exponent(gm, 0), 2);
}

TEST(ShiftedSums, StepVerdictMatchesLatticeModel) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto sum = gen::shifted_sum(rng);
    const int j = gen::uniform(rng, -4, 9);
    const auto v = step_verdict(sum, j);
    const auto expected = from_oracle(oracle::composite_cokernel(sum, j, j + 1, rng));
    EXPECT_EQ(v.cokernel, expected);
    EXPECT_EQ(v.kind == StepKind::Iso, expected.is_trivial());
  }
}

TEST(ShiftedSums, IbarStepMatchesLatticeModel) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const auto sum = gen::shifted_sum(rng);
    const int j = gen::uniform(rng, -4, 9);
    const auto v = ibar_step_verdict(sum, j);
    const auto o = oracle::ibar_step(sum, j);
    EXPECT_TRUE(o.injective);
    EXPECT_EQ(v.cokernel, AbelianGroup::from_cyclic_orders(0, o.cokernel));
    EXPECT_EQ(v.kind == StepKind::Iso, o.cokernel.empty());
  }
}

TEST(ShiftedSums, CompositeCokernelMatchesSmithNormalForm) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const auto sum = gen::shifted_sum(rng);
    const int j0 = gen::uniform(rng, -4, 8);
    const int j1 = j0 + gen::uniform(rng, 0, 10);
    EXPECT_EQ(composite_cokernel(sum, j0, j1), from_oracle(oracle::composite_cokernel(sum, j0, j1, rng)));
  }
  EXPECT_THROW(composite_cokernel(ShiftedIdealSum{{0, 1}}, 3, 2), Error);
}

TEST(ShiftedSums, Stabilization) {
  // Beyond the largest shift the steps are isomorphisms and the composite
  // cokernel no longer grows.
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    const auto sum = gen::shifted_sum(rng);
    const int top = sum.max_shift().value_or(0);
    for (int j = top; j < top + 4; ++j) EXPECT_EQ(step_verdict(sum, j).kind, StepKind::Iso);
    const int j0 = gen::uniform(rng, -4, 8);
    const int j1 = std::max(j0, top);
    EXPECT_EQ(composite_cokernel(sum, j0, j1), composite_cokernel(sum, j0, j1 + 3));
    EXPECT_EQ(composite_cokernel(sum, j0, j1).exponent(), cokernel_exponent(sum, j0));
  }
}

TEST(ShiftedSums, CompositeIsProductOfSteps) {
  // Orders multiply along a chain of injective maps between lattices of equal rank.
  std::mt19937_64 rng(15);
  for (int t = 0; t < 200; ++t) {
    const auto sum = gen::shifted_sum(rng);
    const int j0 = gen::uniform(rng, -4, 8);
    const int j1 = j0 + gen::uniform(rng, 0, 6);
    std::int64_t order = 1;
    for (int j = j0; j < j1; ++j) order *= step_verdict(sum, j).cokernel.order();
    EXPECT_EQ(composite_cokernel(sum, j0, j1).order(), order);
  }
}

TEST(ShiftedSums, ShiftAndRankConservation) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 200; ++t) {
    const auto sum = gen::shifted_sum(rng);
    const int off = gen::uniform(rng, -3, 3);
    const auto moved = sum.shifted_by(off);
    EXPECT_EQ(moved.total_multiplicity(), sum.total_multiplicity());
    const int j = gen::uniform(rng, -4, 9);
    EXPECT_EQ(step_verdict(moved, j + off).cokernel, step_verdict(sum, j).cokernel);
    std::int64_t rank = 0;
    for (const auto& term : evaluate(sum, j)) rank += term.multiplicity;
    EXPECT_EQ(rank, sum.total_multiplicity());
  }
}

TEST(ShiftedSums, Pow2Range) {
  EXPECT_EQ(pow2(0), 1);
  EXPECT_EQ(pow2(62), std::int64_t{1} << 62);
  EXPECT_THROW(pow2(63), Error);
  EXPECT_THROW(pow2(-1), Error);
}

TEST(SmithOracle, SplittingAgreesWithDenseElimination) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 7;
    oracle::Matrix m = oracle::zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i == j || rng() % 4 == 0) m[i][j] = entry(rng);
    auto dense = oracle::dense_smith_normal_form(m);
    oracle::to_invariant_factors(dense.diagonal);
    const auto split = oracle::smith_normal_form(m);
    EXPECT_EQ(split.rank, dense.rank);
    EXPECT_EQ(split.diagonal, dense.diagonal);
  }
}
