#pragma once

// Linearity levels of construction trees and the conversion of a finite
// stratification into nested closed/open decompositions.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "linwitt/error.hpp"
#include "linwitt/scheme_expr.hpp"

namespace linwitt {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct StratificationTree {
  SchemeExpr tree;
  /// Stratum indices in the order the leaves are split off (pre-order).
  std::vector<std::size_t> leaf_order;
};

/// Nested closed decompositions of a stratified space. At every step the
/// minimal remaining stratum (lowest index among ties) is closed in what is
/// left; it becomes the closed part and the rest its open complement.
inline StratificationTree stratification_to_tree(const std::vector<SchemeExpr>& strata,
                                                 const std::vector<ClosureRelation>& order) {
  if (strata.empty()) {
    throw Error(ErrorKind::InvalidStratification, "a stratification needs at least one stratum");
  }
  validate_closure_order(strata.size(), order);
  const auto below = closure_matrix(strata.size(), order);

  std::vector<bool> remaining(strata.size(), true);
  std::vector<std::size_t> picks;
  for (std::size_t step = 0; step < strata.size(); ++step) {
    std::optional<std::size_t> pick;
    for (std::size_t b = 0; b < strata.size() && !pick; ++b) {
      if (!remaining[b]) continue;
      bool minimal = true;
      for (std::size_t a = 0; a < strata.size(); ++a) {
        if (a != b && remaining[a] && below[a][b]) minimal = false;
      }
      if (minimal) pick = b;
    }
    if (!pick) {
      throw Error(ErrorKind::InternalConsistency, "no minimal stratum in a finite partial order");
    }
    remaining[*pick] = false;
    picks.push_back(*pick);
  }

  SchemeExpr tree = strata[picks.back()];
  for (std::size_t k = picks.size() - 1; k-- > 0;) {
    tree = closed_glue(strata[picks[k]], tree);
  }
  return {tree, picks};
}

inline StratificationTree stratification_to_tree(const expr::Stratified& s) {
  return stratification_to_tree(s.strata, s.order);
}

/// P^c x Gm^e stratified by the cells A^i x Gm^e, i = 0..c, each in the
/// closure of the next.
inline SchemeExpr proj_times_torus_cells(int c, int e) {
  require_non_negative(c, "projective dimension");
  require_non_negative(e, "torus rank");
  std::vector<SchemeExpr> cells;
  std::vector<ClosureRelation> order;
  for (int i = 0; i <= c; ++i) {
    cells.push_back(torus_cell(i, e));
    if (i > 0) order.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i));
  }
  return stratified(std::move(cells), std::move(order));
}

/// A^n x Gm^d written as d nested open complements starting from affine
/// spaces: A^n x Gm^k = (A^{n+1} x Gm^{k-1}) \ (A^n x Gm^{k-1}).
inline SchemeExpr torus_cell_as_open_glues(int n, int d) {
  require_non_negative(n, "affine dimension");
  require_non_negative(d, "torus rank");
  if (d == 0) return affine(n);
  return open_glue(torus_cell_as_open_glues(n + 1, d - 1), torus_cell_as_open_glues(n, d - 1));
}

/// Level n of the J-linear construction witnessed by the tree.
inline int j_linear_level(const SchemeExpr& x) {
  return x.visit(overloaded{
      [](const expr::Empty&) { return 0; },
      [](const expr::Affine&) { return 0; },
      [](const expr::TorusCell& t) { return t.torus_rank; },
      [](const expr::ProjTimesTorus& p) {
        return j_linear_level(proj_times_torus_cells(p.proj_dim, p.torus_rank));
      },
      [](const expr::OpenGlue& g) {
        return 1 + std::max(j_linear_level(g.ambient), j_linear_level(g.closed));
      },
      [](const expr::ClosedGlue& g) {
        return 1 + std::max(j_linear_level(g.closed), j_linear_level(g.open));
      },
      [](const expr::Product& p) { return j_linear_level(p.left) + j_linear_level(p.right); },
      [](const expr::Stratified& s) { return j_linear_level(stratification_to_tree(s).tree); },
  });
}

/// Level consumed by the range engine. Closed decompositions and
/// stratifications keep the bound; open complements raise it by one.
inline int range_level(const SchemeExpr& x) {
  return x.visit(overloaded{
      [](const expr::Empty&) { return 0; },
      [](const expr::Affine&) { return 0; },
      [](const expr::TorusCell& t) { return t.torus_rank; },
      [](const expr::ProjTimesTorus& p) { return p.torus_rank; },
      [](const expr::OpenGlue& g) {
        return 1 + std::max(range_level(g.ambient), range_level(g.closed));
      },
      [](const expr::ClosedGlue& g) { return std::max(range_level(g.closed), range_level(g.open)); },
      [](const expr::Product& p) { return range_level(p.left) + range_level(p.right); },
      [](const expr::Stratified& s) {
        int level = 0;
        for (const auto& stratum : s.strata) level = std::max(level, range_level(stratum));
        return level;
      },
  });
}

/// Whether the tree has the shape of a T-linear construction: open
/// complements are taken inside affine spaces only, and everything else is
/// a stratification of T-shaped pieces.
inline bool is_t_linear_shape(const SchemeExpr& x) {
  return x.visit(overloaded{
      [](const expr::Empty&) { return true; },
      [](const expr::Affine&) { return true; },
      [](const expr::TorusCell&) { return true; },
      [](const expr::ProjTimesTorus&) { return true; },
      [](const expr::OpenGlue& g) {
        return g.ambient.get_if<expr::Affine>() != nullptr && is_t_linear_shape(g.closed);
      },
      [](const expr::ClosedGlue& g) { return is_t_linear_shape(g.closed) && is_t_linear_shape(g.open); },
      [](const expr::Product& p) {
        // Products are only recognized when they are again a torus cell.
        auto cellish = [](const SchemeExpr& f) {
          return f.get_if<expr::Affine>() || f.get_if<expr::TorusCell>();
        };
        return cellish(p.left) && cellish(p.right);
      },
      [](const expr::Stratified& s) {
        return std::all_of(s.strata.begin(), s.strata.end(),
                           [](const SchemeExpr& t) { return is_t_linear_shape(t); });
      },
  });
}

/// Recognizes trees that denote A^n x Gm^d: affine spaces, torus cells,
/// open(A^1, A^0) and products of these.
inline std::optional<expr::TorusCell> as_torus_cell(const SchemeExpr& x) {
  return x.visit(overloaded{
      [](const expr::Affine& a) -> std::optional<expr::TorusCell> { return expr::TorusCell{a.dim, 0}; },
      [](const expr::TorusCell& t) -> std::optional<expr::TorusCell> { return t; },
      [](const expr::OpenGlue& g) -> std::optional<expr::TorusCell> {
        const auto* line = g.ambient.get_if<expr::Affine>();
        const auto* point = g.closed.get_if<expr::Affine>();
        if (line && point && line->dim == 1 && point->dim == 0) return expr::TorusCell{0, 1};
        return std::nullopt;
      },
      [](const expr::Product& p) -> std::optional<expr::TorusCell> {
        const auto l = as_torus_cell(p.left);
        const auto r = as_torus_cell(p.right);
        if (!l || !r) return std::nullopt;
        return expr::TorusCell{l->affine_dim + r->affine_dim, l->torus_rank + r->torus_rank};
      },
      [](const auto&) -> std::optional<expr::TorusCell> { return std::nullopt; },
  });
}

}  // namespace linwitt
