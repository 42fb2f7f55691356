#include <gtest/gtest.h>

#include <random>

#include "linwitt/range_engine.hpp"
#include "support/generators.hpp"

using namespace linwitt;

namespace {

SchemeExpr gm() { return open_glue(affine(1), affine(0)); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InternalConsistency;
}

}  // namespace

TEST(IbarRange, Leaves) {
  EXPECT_EQ(ibar_range(affine(4)).iso_diag, 0);
  EXPECT_EQ(ibar_range(torus_cell(2, 5)).iso_diag, 5);
  EXPECT_EQ(ibar_range(gm()).iso_diag, 1);
  const auto v = ibar_range(torus_cell(0, 3));
  EXPECT_EQ(v.at(1, 2), StepStatus::Iso);
  EXPECT_EQ(v.at(0, 2), StepStatus::Injective);
  EXPECT_EQ(v.at(0, 1), StepStatus::Unknown);
}

TEST(IbarRange, FiniteFieldLacksCapability) {
  EXPECT_EQ(kind_of([] { ibar_range(affine(1), FieldCapability::finite_field()); }), ErrorKind::Capability);
}

TEST(IbarRange, AgreesWithRangeLevelAndReplays) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 300; ++t) {
    const auto x = gen::tree(rng, 6);
    const auto v = ibar_range(x);
    EXPECT_EQ(v.iso_diag, range_level(x));
    EXPECT_EQ(replay_provenance(v.provenance), v.iso_diag);
    EXPECT_EQ(v.provenance.back().level, v.iso_diag);
  }
}

TEST(IbarRange, TamperedProvenanceIsRejected) {
  auto v = ibar_range(product(gm(), torus_cell(0, 2)));
  v.provenance.back().level += 1;
  EXPECT_EQ(kind_of([&] { replay_provenance(v.provenance); }), ErrorKind::InternalConsistency);
  auto w = ibar_range(gm());
  w.provenance.back().rule = "made-up";
  EXPECT_EQ(kind_of([&] { replay_provenance(w.provenance); }), ErrorKind::InternalConsistency);
  EXPECT_EQ(kind_of([] { replay_provenance({}); }), ErrorKind::InternalConsistency);
}

TEST(SheafRange, NeedsSmoothness) {
  EXPECT_EQ(kind_of([] { sheaf_range(torus_cell(0, 2)); }), ErrorKind::SmoothnessRequired);
  EXPECT_NO_THROW(sheaf_range(torus_cell(0, 2).with_smooth(true)));
}

TEST(SheafRange, MatchesExplicitTorusCells) {
  for (int d = 0; d <= 10; ++d)
    for (int n : {0, 2}) {
      const auto x = torus_cell(n, d).with_smooth(true);
      const auto v = sheaf_range(x);
      const auto groups = cohomology_sum(x, 0);
      for (int j = -2; j <= d + 3; ++j) {
        const bool explicit_iso = step_verdict(groups, j).kind == StepKind::Iso;
        EXPECT_EQ(v.at(0, j) == StepStatus::Iso, explicit_iso) << n << " " << d << " " << j;
      }
      EXPECT_EQ(v.at(0, d - 1) == StepStatus::Injective, d - 1 < x.dim() + 1);
    }
}

TEST(SheafRange, JacobsonCap) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 200; ++t) {
    const auto x = gen::tree(rng, 6).with_smooth(true);
    const auto v = sheaf_range(x);
    for (int i = 0; i <= std::max(x.dim(), 0); ++i)
      for (int j = x.dim() + 1; j <= x.dim() + 4; ++j) EXPECT_EQ(v.at(i, j), StepStatus::Iso);
  }
}

TEST(SheafRange, LiftKeepsThresholds) {
  const auto v = sheaf_range(product(gm(), gm()).with_smooth(true));
  const auto l = lift_to_I(v);
  EXPECT_EQ(l.coefficients, Coefficients::I);
  EXPECT_TRUE(l.all_twists);
  EXPECT_EQ(l.n, v.n);
  for (int i = 0; i < 3; ++i)
    for (int j = -2; j < 5; ++j) EXPECT_EQ(l.at(i, j), v.at(i, j));
}

TEST(Sharpness, TorusCellsCertified) {
  for (int d = 1; d <= 8; ++d) {
    const auto v = certify_sharpness(product(affine(1), torus_cell(0, d)).with_smooth(true), 0);
    ASSERT_EQ(v.certificates.size(), 2u);
    EXPECT_EQ(v.certificates[0].coefficients, Coefficients::Ibar);
    EXPECT_EQ(v.certificates[1].coefficients, Coefficients::I);
    EXPECT_EQ(v.certificates[1].rule, "four-lemma-lift");
    for (const auto& c : v.certificates) {
      EXPECT_EQ(c.level, d - 1);
      ASSERT_TRUE(c.cokernel);
      EXPECT_EQ(*c.cokernel, AbelianGroup::from_cyclic_orders(0, {2}));
    }
  }
}

TEST(Sharpness, ProjTimesTorusCertified) {
  for (int c = 0; c <= 3; ++c)
    for (int e = 1; e <= 4; ++e) {
      const auto x = proj_times_torus(c, e, TwistLabel::line_bundle(c + 1)).with_smooth(true);
      const auto v = certify_sharpness(x, c);
      ASSERT_EQ(v.certificates.size(), 2u);
      EXPECT_EQ(v.certificates[1].level, c + e - 1);
    }
}

TEST(Sharpness, NeedsExplicitGroups) {
  EXPECT_EQ(kind_of([] { certify_sharpness(closed_glue(affine(0), gm()).with_smooth(true), 0); }),
            ErrorKind::Unsupported);
}

TEST(TLinear, GmWorkedExample) {
  // Gm = A^1 \ {0}: on H^0(Gm, Ibar^0) -> H^0(Gm, Ibar^1) the criterion asks
  // whether H^RS_0(pt, Ibar^0) = Z/2 vanishes. It does not, so the step is
  // not an isomorphism, as the explicit groups I^j + I^{j-1} confirm.
  const auto x = gm();
  const auto r = t_linear_sheaf_verdict(x, 0);
  EXPECT_EQ(r.verdict, TVerdict::NotIso);
  EXPECT_EQ(t_linear_verdict(x, 1, -1).verdict, TVerdict::NotIso);
  EXPECT_EQ(ibar_step_verdict(cohomology_sum(x, 0), 0).kind, StepKind::InjectiveNotSurjective);
  EXPECT_EQ(t_linear_sheaf_obstruction(1, 0, 0), (SheafBidegree{0, 0}));
  // H^1 of Gm vanishes, and the criterion agrees.
  EXPECT_EQ(t_linear_sheaf_verdict(x, 1).verdict, TVerdict::Iso);
}

TEST(TLinear, PuncturedPlane) {
  const auto x = open_glue(affine(2), affine(0));
  EXPECT_EQ(t_linear_sheaf_verdict(x, 1).verdict, TVerdict::NotIso);
  EXPECT_EQ(t_linear_sheaf_obstruction(2, 0, 1), (SheafBidegree{0, 0}));
  EXPECT_EQ(t_linear_sheaf_verdict(x, 2).verdict, TVerdict::Iso);
}

TEST(TLinear, RangesAndRecursion) {
  const auto x = open_glue(affine(3), open_glue(affine(2), affine(0)));
  EXPECT_EQ(t_linear_verdict(x, 0, -2).verdict, TVerdict::Iso);
  EXPECT_EQ(t_linear_verdict(x, 1, -2).verdict, TVerdict::Unknown);
  const auto r = t_linear_verdict(x, 2, -1);
  EXPECT_EQ(r.verdict, TVerdict::NotIso);
  EXPECT_EQ(r.trace.size(), 2u);
  EXPECT_EQ(t_linear_verdict(x, 3, 0).verdict, TVerdict::Iso);
}

TEST(TLinear, CustomOracle) {
  const auto x = open_glue(affine(2), product(affine(0), torus_cell(0, 1)));
  const VanishingOracle unknown = [](const SchemeExpr&, int, int) -> std::optional<bool> { return std::nullopt; };
  EXPECT_EQ(t_linear_verdict(x, 1, -1, unknown).verdict, TVerdict::Unknown);
  const VanishingOracle zero = [](const SchemeExpr&, int, int) -> std::optional<bool> { return true; };
  EXPECT_EQ(t_linear_verdict(x, 1, -1, zero).verdict, TVerdict::Iso);
}

TEST(TLinear, NeedsTShape) {
  EXPECT_EQ(kind_of([] { t_linear_verdict(torus_cell(1, 1), 0, 0); }), ErrorKind::TShapeRequired);
  EXPECT_EQ(kind_of([] { t_linear_sheaf_verdict(open_glue(torus_cell(1, 1), affine(0)), 0); }),
            ErrorKind::TShapeRequired);
}

TEST(Rccm, TorusCellReport) {
  const auto rep = rccm_report(product(affine(0), torus_cell(0, 3)).with_smooth(true), 0, 0, 4);
  ASSERT_EQ(rep.entries.size(), 5u);
  EXPECT_EQ(rep.entries[0].statements, (std::vector<RccmStatement>{{RccmKind::ImageContains, 3}}));
  EXPECT_EQ(rep.entries[2].statements,
            (std::vector<RccmStatement>{{RccmKind::Injective, 0}, {RccmKind::ImageContains, 1}}));
  EXPECT_EQ(rep.entries[3].statements, (std::vector<RccmStatement>{{RccmKind::Iso, 0}}));
  EXPECT_EQ(rep.factorization.size(), 3u);
  EXPECT_EQ(kind_of([] { rccm_report(affine(1), 0, 0, 2); }), ErrorKind::SmoothnessRequired);
  EXPECT_EQ(kind_of([] { rccm_report(affine(1).with_smooth(true), 0, 3, 2); }), ErrorKind::InvalidArgument);
}

TEST(Rccm, ImageBoundIsSharpOnExplicitShapes) {
  // im(cl^i_j) contains 2^{i+n-j} H_sing: the explicit cokernel exponent
  // equals that bound on P^c x Gm^e in degree c.
  for (int c = 0; c <= 3; ++c)
    for (int e = 0; e <= 4; ++e) {
      const auto x = proj_times_torus(c, e, TwistLabel::line_bundle(c + 1)).with_smooth(true);
      const auto groups = cohomology_sum(x, c);
      const auto rep = rccm_report(x, c, c - 2, c + e + 2);
      for (const auto& entry : rep.entries) {
        const std::int64_t exponent = cokernel_exponent(groups, entry.level);
        for (const auto& s : entry.statements) {
          if (s.kind == RccmKind::ImageContains) {
            EXPECT_EQ(exponent, std::int64_t{1} << s.exponent);
          }
          if (s.kind == RccmKind::Iso) {
            EXPECT_EQ(exponent, 1);
          }
        }
      }
    }
}
