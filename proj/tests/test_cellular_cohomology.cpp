#include <gtest/gtest.h>

#include <random>

#include "linwitt/cellular_cohomology.hpp"
#include "support/lattice_oracle.hpp"

using namespace linwitt;

namespace {

// H^0(X x Gm, I^j) = H^0(X, I^j) + H^0(X, I^{j-1}), iterated from a point.
ShiftedIdealSum h0_by_iterated_gm(int d) {
  ShiftedIdealSum s{{0, 1}};
  for (int k = 0; k < d; ++k) {
    ShiftedIdealSum next = s;
    for (const auto& [shift, m] : s.summands()) next.add(shift + 1, m);
    s = next;
  }
  return s;
}

}  // namespace

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(10, 0), 1);
  EXPECT_EQ(binomial(10, 10), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(30, 15), 155117520);
}

TEST(TorusCells, MatchIteratedGmSequence) {
  for (int d = 0; d <= 10; ++d)
    for (int n : {0, 1, 2, 5}) EXPECT_EQ(h0_torus_cells(n, d), h0_by_iterated_gm(d));
}

TEST(TorusCells, StepsAndExponent) {
  for (int d = 0; d <= 10; ++d) {
    const auto s = h0_torus_cells(2, d);
    EXPECT_EQ(s.total_multiplicity(), std::int64_t{1} << d);
    for (int j = -3; j <= d + 3; ++j) EXPECT_EQ(step_verdict(s, j).kind == StepKind::Iso, j >= d);
    EXPECT_EQ(cokernel_exponent(s, 0), std::int64_t{1} << d);
  }
}

TEST(TorusCells, CohomologyDispatch) {
  const auto gm = open_glue(affine(1), affine(0));
  EXPECT_EQ(cohomology_sum(gm, 0), (ShiftedIdealSum{{0, 1}, {1, 1}}));
  EXPECT_EQ(cohomology_sum(product(affine(3), torus_cell(0, 2)), 0), h0_torus_cells(3, 2));
  EXPECT_EQ(cohomology_sum(affine(4), 0), (ShiftedIdealSum{{0, 1}}));
  EXPECT_TRUE(cohomology_sum(empty_scheme(), 3).empty());
  EXPECT_STREQ(cohomology_rule(gm), rules::kCohTorusCell);
  EXPECT_STREQ(cohomology_rule(proj_times_torus(1, 1, TwistLabel::line_bundle(2))), rules::kCohCellular);
  try {
    cohomology_sum(gm, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
  }
  try {
    cohomology_sum(closed_glue(affine(0), gm), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
  }
}

TEST(ProjTimesTorus, CellularSegment) {
  const auto seg = cellular_complex_proj_times_torus(2, 3, TwistLabel::line_bundle(3), 2);
  EXPECT_EQ(seg.current, (ShiftedIdealSum{{2, 1}, {3, 3}, {4, 3}, {5, 1}}));
  EXPECT_EQ(seg.incoming, (ShiftedIdealSum{{1, 1}, {2, 3}, {3, 3}, {4, 1}}));
  EXPECT_EQ(seg.differential, Differential::Zero);
  const auto point = cellular_complex_proj_times_torus(0, 2, TwistLabel::line_bundle(1), 0);
  EXPECT_TRUE(point.incoming.empty());
  EXPECT_EQ(point.current, h0_torus_cells(0, 2));
}

TEST(ProjTimesTorus, UnsupportedTwistsAndDegrees) {
  auto unsupported = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::Unsupported;
    }
    return false;
  };
  EXPECT_TRUE(unsupported([] { hc_proj_times_torus(2, 1, TwistLabel::line_bundle(2)); }));
  EXPECT_TRUE(unsupported([] { hc_proj_times_torus(2, 1, TwistLabel::trivial()); }));
  EXPECT_TRUE(unsupported([] { hc_proj_times_torus(2, 1, TwistLabel("L")); }));
  EXPECT_TRUE(unsupported([] { cellular_complex_proj_times_torus(2, 1, TwistLabel::line_bundle(3), 1); }));
  EXPECT_TRUE(unsupported([] { cohomology_sum(proj_times_torus(2, 1, TwistLabel::line_bundle(3)), 0); }));
}

TEST(ProjTimesTorus, SharpExponent) {
  for (int d = 1; d <= 10; ++d)
    for (int c = 0; c < d; ++c) {
      const auto h = hc_proj_times_torus(c, d - c, TwistLabel::line_bundle(c + 1));
      EXPECT_EQ(cokernel_exponent(h, c), std::int64_t{1} << (d - c));
      const int top = h.max_shift().value();
      EXPECT_EQ(composite_cokernel(h, c, top).exponent(), std::int64_t{1} << (d - c));
    }
}

TEST(ProjTimesTorus, CokernelAgreesWithSmithNormalForm) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const int d = std::uniform_int_distribution<int>(1, 7)(rng);
    const int c = std::uniform_int_distribution<int>(0, d - 1)(rng);
    const int j0 = c + std::uniform_int_distribution<int>(-2, 2)(rng);
    const auto h = hc_proj_times_torus(c, d - c, TwistLabel::line_bundle(c + 1));
    const int j1 = std::max(j0, h.max_shift().value());
    const auto o = oracle::composite_cokernel(h, j0, j1, rng);
    EXPECT_EQ(composite_cokernel(h, j0, j1), AbelianGroup::from_cyclic_orders(0, o.torsion));
    EXPECT_EQ(o.free_rank, 0u);
  }
}
