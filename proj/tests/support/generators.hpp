#pragma once

// Random inputs for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "linwitt/scheme_calculus.hpp"
#include "linwitt/scheme_expr.hpp"
#include "linwitt/shifted_sums.hpp"
#include "linwitt/stratification.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline linwitt::SchemeExpr leaf(Rng& rng) {
  switch (uniform(rng, 0, 9)) {
    case 0: return linwitt::empty_scheme();
    case 1:
    case 2:
    case 3: return linwitt::affine(uniform(rng, 0, 3));
    case 4:
    case 5:
    case 6: return linwitt::torus_cell(uniform(rng, 0, 2), uniform(rng, 0, 3));
    default: {
      const int c = uniform(rng, 0, 2);
      return linwitt::proj_times_torus(c, uniform(rng, 0, 2), linwitt::TwistLabel::line_bundle(c + 1));
    }
  }
}

/// Random construction tree of depth at most `depth`; every node satisfies
/// the dimension constraints of its constructor.
inline linwitt::SchemeExpr tree(Rng& rng, int depth) {
  using namespace linwitt;
  if (depth <= 1 || uniform(rng, 0, 4) == 0) return leaf(rng);
  switch (uniform(rng, 0, 3)) {
    case 0: {
      SchemeExpr ambient = tree(rng, depth - 1);
      if (ambient.dim() <= 0) return open_glue(ambient, empty_scheme());
      for (int attempt = 0; attempt < 8; ++attempt) {
        SchemeExpr closed = tree(rng, depth - 1);
        if (closed.dim() < ambient.dim()) return open_glue(ambient, closed);
      }
      return open_glue(ambient, affine(uniform(rng, 0, ambient.dim() - 1)));
    }
    case 1: return closed_glue(tree(rng, depth - 1), tree(rng, depth - 1));
    case 2: return product(tree(rng, depth - 1), tree(rng, depth - 1));
    default: {
      const int count = uniform(rng, 1, 3);
      std::vector<SchemeExpr> strata;
      for (int k = 0; k < count; ++k) strata.push_back(tree(rng, depth - 1));
      // chain the strata whose dimensions strictly increase
      std::vector<std::size_t> idx(strata.size());
      for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
      std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return strata[a].dim() < strata[b].dim(); });
      std::vector<ClosureRelation> order;
      for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
        const auto& a = strata[idx[k]];
        const auto& b = strata[idx[k + 1]];
        if (a.dim() < b.dim() && !b.is_empty() && uniform(rng, 0, 1)) order.emplace_back(idx[k], idx[k + 1]);
      }
      return stratified(std::move(strata), std::move(order));
    }
  }
}

inline int depth_of(const linwitt::SchemeExpr& x) {
  using namespace linwitt;
  return x.visit(overloaded{
      [](const expr::OpenGlue& g) { return 1 + std::max(depth_of(g.ambient), depth_of(g.closed)); },
      [](const expr::ClosedGlue& g) { return 1 + std::max(depth_of(g.closed), depth_of(g.open)); },
      [](const expr::Product& p) { return 1 + std::max(depth_of(p.left), depth_of(p.right)); },
      [](const expr::Stratified& s) {
        int d = 0;
        for (const auto& t : s.strata) d = std::max(d, depth_of(t));
        return 1 + d;
      },
      [](const auto&) { return 1; },
  });
}

inline linwitt::ShiftedIdealSum shifted_sum(Rng& rng, int shift_lo = -3, int shift_hi = 8, int max_terms = 6,
                                            int max_mult = 5) {
  linwitt::ShiftedIdealSum s;
  const int terms = uniform(rng, 0, max_terms);
  for (int k = 0; k < terms; ++k) s.add(uniform(rng, shift_lo, shift_hi), uniform(rng, 1, max_mult));
  return s;
}

/// A realization whose closures are the down-sets of a random partial
/// order on the pieces, so the boundary condition holds by construction.
struct RandomStratification {
  linwitt::FinitePosetRealization realization;
  std::vector<linwitt::ClosureRelation> order;  // generating relations a < b
};

inline RandomStratification stratification(Rng& rng, int max_points = 24, int max_strata = 6) {
  RandomStratification out;
  const int points = uniform(rng, 1, max_points);
  const int strata = uniform(rng, 1, std::min(max_strata, points));
  auto& r = out.realization;
  r.pieces.assign(static_cast<std::size_t>(strata), {});
  for (int p = 0; p < points; ++p) {
    r.ground.insert(p);
    // the first `strata` points seed every piece so none is empty
    const int k = p < strata ? p : uniform(rng, 0, strata - 1);
    r.pieces[static_cast<std::size_t>(k)].insert(p);
  }
  // random relations between consecutive-index strata keep the order acyclic
  for (int a = 0; a < strata; ++a)
    for (int b = a + 1; b < strata; ++b)
      if (uniform(rng, 0, 2) == 0) out.order.emplace_back(a, b);
  const auto below = linwitt::closure_matrix(static_cast<std::size_t>(strata), out.order);
  r.closures.assign(static_cast<std::size_t>(strata), {});
  for (int b = 0; b < strata; ++b)
    for (int a = 0; a < strata; ++a)
      if (below[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        const auto& piece = r.pieces[static_cast<std::size_t>(a)];
        r.closures[static_cast<std::size_t>(b)].insert(piece.begin(), piece.end());
      }
  return out;
}

inline linwitt::SetFamily set_family(Rng& rng, int n, int max_points = 24) {
  linwitt::SetFamily f;
  const int points = uniform(rng, 1, max_points);
  for (int p = 0; p < points; ++p) f.ground.insert(p);
  f.sets.assign(static_cast<std::size_t>(n), {});
  for (auto& s : f.sets)
    for (int p = 0; p < points; ++p)
      if (uniform(rng, 0, 1)) s.insert(p);
  return f;
}

}  // namespace gen
