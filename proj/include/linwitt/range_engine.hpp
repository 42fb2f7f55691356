#pragma once

// Where multiplication by <<-1>> is bijective on Ibar- and I-cohomology of a
// linear scheme, propagated through the construction tree by the five- and
// four-lemma on localization sequences, and what that says about the real
// cycle class map.
//
// Indexing: Rost-Schmid groups H^RS_i(X, Ibar^j) are indexed by the
// dimension i of points; the verdicts live on the diagonal i + j. For smooth
// X of dimension N, H^k(X, Ibar^j) = H^RS_{N-k}(X, Ibar^{j-N}), so the
// diagonal condition i_RS + j_RS >= n becomes j >= k + n.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linwitt/abelian_group.hpp"
#include "linwitt/cellular_cohomology.hpp"
#include "linwitt/error.hpp"
#include "linwitt/scheme_calculus.hpp"
#include "linwitt/scheme_expr.hpp"
#include "linwitt/shifted_sums.hpp"
#include "linwitt/witt_core.hpp"

namespace linwitt {

enum class StepStatus { Iso, Injective, Unknown };

inline const char* to_string(StepStatus s) {
  switch (s) {
    case StepStatus::Iso: return "ISO";
    case StepStatus::Injective: return "INJECTIVE";
    case StepStatus::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

/// One rule applied at one tree node. Leaves carry their parameters,
/// inner nodes the provenance indices of their children.
struct RuleApplication {
  std::string rule;
  std::string node;
  std::vector<int> params;
  std::vector<std::size_t> children;
  int level = 0;
};

namespace rules {
inline constexpr const char* kEmpty = "leaf-empty";
inline constexpr const char* kAffine = "leaf-affine";
inline constexpr const char* kTorusCell = "leaf-torus-cell";
inline constexpr const char* kProjTimesTorus = "leaf-proj-times-torus-cells";
inline constexpr const char* kClosedGlue = "closed-glue-five-lemma";
inline constexpr const char* kOpenGlue = "open-glue-four-lemma-shift";
inline constexpr const char* kProduct = "product-sum";
inline constexpr const char* kStratified = "stratified-max";
}  // namespace rules

/// Ibar-cohomology verdict in Rost-Schmid indexing: iso for i + j >= iso_diag,
/// injective for i + j = inj_diag.
struct RangeVerdict {
  int iso_diag = 0;
  int inj_diag = -1;
  std::vector<RuleApplication> provenance;

  StepStatus at(int i, int j) const {
    if (i + j >= iso_diag) return StepStatus::Iso;
    if (i + j == inj_diag) return StepStatus::Injective;
    return StepStatus::Unknown;
  }
};

namespace detail {

inline std::size_t record(const SchemeExpr& x, std::vector<RuleApplication>& out) {
  RuleApplication app = x.visit(overloaded{
      [](const expr::Empty&) { return RuleApplication{rules::kEmpty, "empty", {}, {}, 0}; },
      [](const expr::Affine& a) {
        return RuleApplication{rules::kAffine, "A^" + std::to_string(a.dim), {a.dim}, {}, 0};
      },
      [](const expr::TorusCell& t) {
        return RuleApplication{rules::kTorusCell,
                               "A^" + std::to_string(t.affine_dim) + " x Gm^" + std::to_string(t.torus_rank),
                               {t.affine_dim, t.torus_rank}, {}, t.torus_rank};
      },
      [](const expr::ProjTimesTorus& p) {
        return RuleApplication{rules::kProjTimesTorus,
                               "P^" + std::to_string(p.proj_dim) + " x Gm^" + std::to_string(p.torus_rank),
                               {p.proj_dim, p.torus_rank}, {}, p.torus_rank};
      },
      [&out](const expr::OpenGlue& g) {
        const auto a = record(g.ambient, out);
        const auto c = record(g.closed, out);
        return RuleApplication{rules::kOpenGlue, "open", {}, {a, c},
                               1 + std::max(out[a].level, out[c].level)};
      },
      [&out](const expr::ClosedGlue& g) {
        const auto c = record(g.closed, out);
        const auto o = record(g.open, out);
        return RuleApplication{rules::kClosedGlue, "closed", {}, {c, o},
                               std::max(out[c].level, out[o].level)};
      },
      [&out](const expr::Product& p) {
        const auto l = record(p.left, out);
        const auto r = record(p.right, out);
        return RuleApplication{rules::kProduct, "product", {}, {l, r}, out[l].level + out[r].level};
      },
      [&out](const expr::Stratified& s) {
        RuleApplication app{rules::kStratified, "strat", {}, {}, 0};
        for (const auto& stratum : s.strata) {
          const auto k = record(stratum, out);
          app.children.push_back(k);
          app.level = std::max(app.level, out[k].level);
        }
        return app;
      },
  });
  out.push_back(std::move(app));
  return out.size() - 1;
}

}  // namespace detail

/// Recomputes every level of a provenance chain from its rules alone and
/// returns the root level. Throws InternalConsistency on any mismatch.
inline int replay_provenance(const std::vector<RuleApplication>& provenance) {
  if (provenance.empty()) {
    throw Error(ErrorKind::InternalConsistency, "empty provenance");
  }
  std::vector<int> level(provenance.size(), 0);
  for (std::size_t k = 0; k < provenance.size(); ++k) {
    const auto& app = provenance[k];
    for (auto c : app.children) {
      if (c >= k) throw Error(ErrorKind::InternalConsistency, "provenance is not in post-order");
    }
    int value = 0;
    if (app.rule == rules::kEmpty || app.rule == rules::kAffine) {
      value = 0;
    } else if (app.rule == rules::kTorusCell || app.rule == rules::kProjTimesTorus) {
      value = app.params.at(1);
    } else if (app.rule == rules::kOpenGlue) {
      value = 1 + std::max(level[app.children.at(0)], level[app.children.at(1)]);
    } else if (app.rule == rules::kClosedGlue) {
      value = std::max(level[app.children.at(0)], level[app.children.at(1)]);
    } else if (app.rule == rules::kProduct) {
      value = level[app.children.at(0)] + level[app.children.at(1)];
    } else if (app.rule == rules::kStratified) {
      for (auto c : app.children) value = std::max(value, level[c]);
    } else {
      throw Error(ErrorKind::InternalConsistency, "unknown rule " + app.rule);
    }
    if (value != app.level) {
      throw Error(ErrorKind::InternalConsistency, "provenance entry " + std::to_string(k) +
                                                      " records level " + std::to_string(app.level) +
                                                      " but replays to " + std::to_string(value));
    }
    level[k] = value;
  }
  return level.back();
}

/// Range of i + j where <<-1>> : H^RS_i(X, Ibar^j) -> H^RS_i(X, Ibar^{j+1})
/// is bijective. The leaf case needs the step to be bijective on Ibar^j(F)
/// for j >= 0, which fails for finite fields.
inline RangeVerdict ibar_range(const SchemeExpr& x,
                               const FieldCapability& field = FieldCapability::real_numbers()) {
  if (!field.pfister_iso_on_ibar) {
    throw Error(ErrorKind::Capability,
                "<<-1>> : Ibar^j(" + field.name + ") -> Ibar^{j+1}(" + field.name +
                    ") is not bijective for all j >= 0 (over a finite field Ibar^1 = Z/2 but "
                    "Ibar^2 = 0), so the base case of the range propagation fails");
  }
  RangeVerdict v;
  detail::record(x, v.provenance);
  v.iso_diag = v.provenance.back().level;
  v.inj_diag = v.iso_diag - 1;
  return v;
}

enum class Coefficients { Ibar, I };

inline const char* to_string(Coefficients c) { return c == Coefficients::Ibar ? "Ibar" : "I"; }

/// Certified non-surjectivity of <<-1>> : H^i(X, C^j) -> H^i(X, C^{j+1}).
struct NonSurjectivityCertificate {
  int degree = 0;
  int level = 0;
  Coefficients coefficients = Coefficients::Ibar;
  std::string rule;
  /// Known only when it was computed from explicit groups.
  std::optional<AbelianGroup> cokernel;
};

/// Sheaf-cohomology verdict for smooth X: iso for j >= i + n, injective for
/// j = i + n - 1, and iso for j >= dim + 1 regardless of n.
struct SheafRangeVerdict {
  int n = 0;
  int dim = 0;
  Coefficients coefficients = Coefficients::Ibar;
  /// Statements about I-coefficients hold for every line bundle twist.
  bool all_twists = false;
  std::vector<RuleApplication> provenance;
  std::vector<NonSurjectivityCertificate> certificates;

  int iso_from(int i) const { return i + n; }
  int inj_at(int i) const { return i + n - 1; }

  StepStatus at(int i, int j) const {
    if (j >= i + n || j >= dim + 1) return StepStatus::Iso;
    if (j == i + n - 1) return StepStatus::Injective;
    return StepStatus::Unknown;
  }
};

inline void require_smooth(const SchemeExpr& x) {
  if (!x.smooth()) {
    throw Error(ErrorKind::SmoothnessRequired,
                "sheaf-cohomology statements need a smooth scheme; assert smoothness explicitly");
  }
}

inline SheafRangeVerdict sheaf_range(const SchemeExpr& x,
                                     const FieldCapability& field = FieldCapability::real_numbers()) {
  require_smooth(x);
  const RangeVerdict rs = ibar_range(x, field);
  SheafRangeVerdict v;
  v.n = rs.iso_diag;
  v.dim = x.dim();
  v.coefficients = Coefficients::Ibar;
  v.provenance = rs.provenance;
  return v;
}

/// Moves an Ibar verdict to I(L)-coefficients for all twists L. The
/// thresholds carry over unchanged; a certified Ibar non-surjectivity at
/// j = i + n - 1 becomes one for I by the four-lemma.
inline SheafRangeVerdict lift_to_I(const SheafRangeVerdict& v) {
  SheafRangeVerdict out = v;
  out.coefficients = Coefficients::I;
  out.all_twists = true;
  out.certificates.clear();
  for (const auto& cert : v.certificates) {
    if (cert.coefficients == Coefficients::I) {
      out.certificates.push_back(cert);
    } else if (cert.level == v.inj_at(cert.degree)) {
      NonSurjectivityCertificate lifted = cert;
      lifted.coefficients = Coefficients::I;
      lifted.rule = "four-lemma-lift";
      lifted.cokernel.reset();  // only non-surjectivity transfers
      out.certificates.push_back(lifted);
    }
  }
  return out;
}

/// Sharpness of the range at degree i: computes the explicit Ibar step at
/// j = i + n - 1 and lifts a non-surjectivity to I-coefficients. The result
/// carries both the Ibar certificate and its lift. The explicit I-groups
/// are used to cross-check every claim of the engine.
inline SheafRangeVerdict certify_sharpness(const SchemeExpr& x, int degree,
                                           const FieldCapability& field = FieldCapability::real_numbers()) {
  SheafRangeVerdict v = sheaf_range(x, field);
  const ShiftedIdealSum groups = cohomology_sum(x, degree);
  const int j = v.inj_at(degree);

  const StepVerdict ibar = ibar_step_verdict(groups, j);
  if (ibar.kind == StepKind::InjectiveNotSurjective) {
    v.certificates.push_back({degree, j, Coefficients::Ibar, "explicit-ibar-groups", ibar.cokernel});
  }
  SheafRangeVerdict lifted = lift_to_I(v);

  const StepVerdict direct = step_verdict(groups, j);
  for (auto& cert : lifted.certificates) {
    if (cert.level != j) continue;
    if (direct.kind != StepKind::InjectiveNotSurjective) {
      throw Error(ErrorKind::InternalConsistency,
                  "lifted non-surjectivity disagrees with the explicit I-groups");
    }
    cert.cokernel = direct.cokernel;
  }
  lifted.certificates.insert(lifted.certificates.begin(), v.certificates.begin(), v.certificates.end());
  const int stable_top = std::max(groups.max_shift().value_or(0), v.iso_from(degree)) + 2;
  for (int level = v.iso_from(degree); level <= stable_top; ++level) {
    if (step_verdict(groups, level).kind != StepKind::Iso ||
        ibar_step_verdict(groups, level).kind != StepKind::Iso) {
      throw Error(ErrorKind::InternalConsistency,
                  "engine claims an isomorphism at j = " + std::to_string(level) +
                      " that the explicit groups contradict");
    }
  }
  return lifted;
}

// ---- T-linear analysis -----------------------------------------------------

enum class TVerdict { Iso, NotIso, Unknown };

inline const char* to_string(TVerdict v) {
  switch (v) {
    case TVerdict::Iso: return "ISO";
    case TVerdict::NotIso: return "NOT_ISO";
    case TVerdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

/// Answers whether H^RS_i(Z, Ibar^j) vanishes: true = vanishes, false =
/// certified nonzero, nullopt = unknown.
using VanishingOracle = std::function<std::optional<bool>(const SchemeExpr&, int, int)>;

/// Vanishing facts that follow from dimension and the explicit degree-0
/// groups: no points outside [0, dim]; A^N has only H^RS_N = Ibar^{j+N}(R);
/// for a torus cell of dimension N, H^RS_N(X, Ibar^j) = H^0(X, Ibar^{j+N}),
/// which is nonzero exactly when j + N >= 0 (constant classes survive at a
/// real point).
inline std::optional<bool> default_vanishing(const SchemeExpr& z, int i, int j) {
  if (z.dim() < 0 || i < 0 || i > z.dim()) return true;
  if (const auto* a = z.get_if<expr::Affine>()) {
    return !(i == a->dim && j + a->dim >= 0);
  }
  if (const auto cell = as_torus_cell(z)) {
    const int top = cell->affine_dim + cell->torus_rank;
    if (i == top) return j + top < 0;
  }
  return std::nullopt;
}

struct TLinearResult {
  TVerdict verdict = TVerdict::Unknown;
  std::vector<std::string> trace;
};

namespace detail {

inline TLinearResult step_on(const SchemeExpr& z, int i, int j, const VanishingOracle& oracle);

inline TLinearResult t_linear(const expr::OpenGlue& g, int i, int j, const VanishingOracle& oracle) {
  TLinearResult out;
  const std::string at = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
  if (i + j <= -2) {
    out.verdict = TVerdict::Iso;
    out.trace.push_back(at + ": both Rost-Schmid complexes vanish in this range");
    return out;
  }
  if (i + j == -1) {
    out.trace.push_back(at + ": i + j = -1 lies outside the T-linear criterion");
    return out;
  }
  if (i + j == 0) {
    const auto vanishes = oracle(g.closed, i - 1, -i + 1);
    const std::string q = "H^RS_" + std::to_string(i - 1) + "(Z, Ibar^" + std::to_string(-i + 1) + ")";
    if (!vanishes) {
      out.trace.push_back(at + ": i + j = 0, " + q + " undecided");
    } else if (*vanishes) {
      out.verdict = TVerdict::Iso;
      out.trace.push_back(at + ": i + j = 0, " + q + " = 0");
    } else {
      out.verdict = TVerdict::NotIso;
      out.trace.push_back(at + ": i + j = 0, " + q + " != 0");
    }
    return out;
  }
  out.trace.push_back(at + ": i + j >= 1, reduce to (" + std::to_string(i - 1) + ", " +
                      std::to_string(j) + ") on Z");
  TLinearResult inner = step_on(g.closed, i - 1, j, oracle);
  out.verdict = inner.verdict;
  out.trace.insert(out.trace.end(), inner.trace.begin(), inner.trace.end());
  return out;
}

inline TLinearResult step_on(const SchemeExpr& z, int i, int j, const VanishingOracle& oracle) {
  if (const auto* g = z.get_if<expr::OpenGlue>(); g && g->ambient.get_if<expr::Affine>()) {
    return t_linear(*g, i, j, oracle);
  }
  TLinearResult out;
  const std::string at = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
  if (z.dim() < 0 || i < 0 || i > z.dim()) {
    out.verdict = TVerdict::Iso;
    out.trace.push_back(at + " on Z: no points of dimension " + std::to_string(i));
  } else if (i + j <= -2) {
    out.verdict = TVerdict::Iso;
    out.trace.push_back(at + " on Z: both Rost-Schmid complexes vanish in this range");
  } else if (ibar_range(z).at(i, j) == StepStatus::Iso) {
    out.verdict = TVerdict::Iso;
    out.trace.push_back(at + " on Z: inside the propagated range i + j >= " +
                        std::to_string(ibar_range(z).iso_diag));
  } else {
    out.trace.push_back(at + " on Z: outside every available rule");
  }
  return out;
}

}  // namespace detail

/// Exact criterion for X = A^n \ Z:
///   i + j = 0 : iso iff H^RS_{i-1}(Z, Ibar^{-i+1}) = 0,
///   i + j >= 1: iso iff the step is iso at (i-1, j) on Z.
inline TLinearResult t_linear_verdict(const SchemeExpr& x, int i, int j,
                                      const VanishingOracle& oracle = default_vanishing) {
  const auto* g = x.get_if<expr::OpenGlue>();
  if (!g || !g->ambient.get_if<expr::Affine>()) {
    throw Error(ErrorKind::TShapeRequired, "the T-linear criterion needs a tree open(A^n, Z)");
  }
  return detail::t_linear(*g, i, j, oracle);
}

/// Sheaf bidegree (k, q) of the group H^k(Z, Ibar^q) deciding whether
/// H^i(X, Ibar^i) -> H^i(X, Ibar^{i+1}) is bijective for smooth X = A^n \ Z
/// with smooth Z of codimension c: k = q = i - c + 1.
struct SheafBidegree {
  int degree = 0;
  int level = 0;
  friend bool operator==(const SheafBidegree&, const SheafBidegree&) = default;
};

inline SheafBidegree t_linear_sheaf_obstruction(int ambient_dim, int closed_dim, int i) {
  // H^i(X, Ibar^i) = H^RS_{n-i}(X, Ibar^{i-n}); the criterion asks about
  // H^RS_{n-i-1}(Z, Ibar^{i-n+1}) = H^{dim Z - (n-i-1)}(Z, Ibar^{i-n+1+dim Z}).
  const int c = ambient_dim - closed_dim;
  return {i - c + 1, i - c + 1};
}

/// The diagonal step H^i(X, Ibar^i) -> H^i(X, Ibar^{i+1}) for X = open(A^n, Z).
inline TLinearResult t_linear_sheaf_verdict(const SchemeExpr& x, int i,
                                            const VanishingOracle& oracle = default_vanishing) {
  const auto* g = x.get_if<expr::OpenGlue>();
  if (!g || !g->ambient.get_if<expr::Affine>()) {
    throw Error(ErrorKind::TShapeRequired, "the T-linear criterion needs a tree open(A^n, Z)");
  }
  const int n = x.dim();
  return t_linear_verdict(x, n - i, i - n, oracle);
}

// ---- real cycle class map --------------------------------------------------

enum class RccmKind { Iso, Injective, ImageContains, ImageEquals };

inline const char* to_string(RccmKind k) {
  switch (k) {
    case RccmKind::Iso: return "ISO";
    case RccmKind::Injective: return "INJECTIVE";
    case RccmKind::ImageContains: return "IMAGE_CONTAINS";
    case RccmKind::ImageEquals: return "IMAGE_EQUALS";
  }
  return "ISO";
}

/// ImageContains: im(cl^i_j) contains 2^exponent H^i_sing.
/// ImageEquals:   im(cl^i_j) = 2^exponent im(cl^i_i).
struct RccmStatement {
  RccmKind kind = RccmKind::Iso;
  int exponent = 0;
  friend bool operator==(const RccmStatement&, const RccmStatement&) = default;
};

struct RccmEntry {
  int level = 0;
  std::vector<RccmStatement> statements;
};

struct RccmVerdict {
  int degree = 0;
  int n = 0;
  int dim = 0;
  std::vector<RccmEntry> entries;
  std::vector<RuleApplication> provenance;
  std::vector<std::string> factorization;
};

/// cl^i_j : H^i(X, I^j(L)) -> H^i_sing(X(R), Z(L)) for j in [j_min, j_max].
inline RccmVerdict rccm_report(const SchemeExpr& x, int degree, int j_min, int j_max,
                               const FieldCapability& field = FieldCapability::real_numbers()) {
  if (j_max < j_min) throw Error(ErrorKind::InvalidArgument, "empty level range");
  const SheafRangeVerdict v = lift_to_I(sheaf_range(x, field));
  RccmVerdict out;
  out.degree = degree;
  out.n = v.n;
  out.dim = v.dim;
  out.provenance = v.provenance;
  const int i = degree;
  out.factorization = {
      "H^" + std::to_string(i) + "(X, I^" + std::to_string(i + v.n - 1) + "(L)) injects into H^" +
          std::to_string(i) + "(X, I^" + std::to_string(i + v.n) + "(L))",
      "H^" + std::to_string(i) + "(X, I^j(L)) -> H^" + std::to_string(i) + "(X, I^{j+1}(L)) is bijective for j >= " +
          std::to_string(i + v.n),
      "H^" + std::to_string(i) + "(X, I^" + std::to_string(std::min(v.dim + 1, i + v.n)) +
          "(L)) is isomorphic to H^" + std::to_string(i) + "_sing(X(R), Z(L))",
  };
  for (int j = j_min; j <= j_max; ++j) {
    RccmEntry e;
    e.level = j;
    if (v.at(i, j) == StepStatus::Iso) {
      e.statements.push_back({RccmKind::Iso, 0});
    } else {
      if (j == i + v.n - 1) e.statements.push_back({RccmKind::Injective, 0});
      e.statements.push_back({RccmKind::ImageContains, i + v.n - j});
      if (j < i) e.statements.push_back({RccmKind::ImageEquals, i - j});
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace linwitt
