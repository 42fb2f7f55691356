#pragma once

// Explicit I^j-cohomology of torus cells A^n x Gm^d (degree 0) and of
// P^c x Gm^e with twist O(c+1) (degree c), as shifted ideal sums in j.

#include <cstdint>
#include <optional>
#include <string>

#include "linwitt/error.hpp"
#include "linwitt/scheme_calculus.hpp"
#include "linwitt/scheme_expr.hpp"
#include "linwitt/shifted_sums.hpp"

namespace linwitt {

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

/// H^0(A^n x Gm^d, I^j) = (+)_{i=0}^{d} I^{j-i}^{C(d,i)}, independent of n.
inline ShiftedIdealSum h0_torus_cells(int n, int d) {
  require_non_negative(n, "affine dimension");
  require_non_negative(d, "torus rank");
  ShiftedIdealSum sum;
  for (int i = 0; i <= d; ++i) sum.add(i, binomial(d, i));
  return sum;
}

enum class Differential { Zero };

/// Two consecutive terms of the cellular complex of P^c x Gm^e with
/// I^j(O(c+1)) coefficients around degree c, as functions of j.
struct CellularSegment {
  int degree = 0;
  ShiftedIdealSum incoming;  // degree c-1 cells A^{c-1} x Gm^e
  ShiftedIdealSum current;   // degree c cells A^c x Gm^e
  Differential differential = Differential::Zero;
};

inline bool has_zero_differential_twist(int c, const TwistLabel& twist) {
  const auto k = twist.degree();
  return k && *k == c + 1;
}

inline Error unsupported_differential(int c, const TwistLabel& twist, int degree) {
  return Error(ErrorKind::Unsupported,
               "no cellular differential rule for P^" + std::to_string(c) + " x Gm^e with twist " +
                   twist.name() + " in degree " + std::to_string(degree) +
                   "; only twist O(c+1) in degree c is available");
}

/// Each degree-k cell A^k x Gm^e contributes H^0(A^k x Gm^e, I^{j-k}), so a
/// term in degree k is h0_torus_cells shifted by k. The differential into
/// degree c vanishes for the twist O(c+1). c = 0 has no incoming term.
inline CellularSegment cellular_complex_proj_times_torus(int c, int e, const TwistLabel& twist,
                                                         int degree) {
  require_non_negative(c, "projective dimension");
  require_non_negative(e, "torus rank");
  if (degree != c || !has_zero_differential_twist(c, twist)) {
    throw unsupported_differential(c, twist, degree);
  }
  CellularSegment seg;
  seg.degree = degree;
  const ShiftedIdealSum cell = h0_torus_cells(0, e);
  seg.current = cell.shifted_by(c);
  if (c > 0) seg.incoming = cell.shifted_by(c - 1);
  return seg;
}

/// H^c(P^c x Gm^e, I^j(O(c+1))): the degree-c term, since the incoming
/// differential is zero and there are no cells above degree c.
inline ShiftedIdealSum hc_proj_times_torus(int c, int e, const TwistLabel& twist) {
  return cellular_complex_proj_times_torus(c, e, twist, c).current;
}

namespace rules {
inline constexpr const char* kCohEmpty = "cohomology-empty";
inline constexpr const char* kCohTorusCell = "torus-cell-degree-zero";
inline constexpr const char* kCohCellular = "cellular-complex-zero-differential";
}  // namespace rules

/// Name of the rule cohomology_sum applies to x.
inline const char* cohomology_rule(const SchemeExpr& x) {
  if (x.is_empty()) return rules::kCohEmpty;
  if (as_torus_cell(x)) return rules::kCohTorusCell;
  return rules::kCohCellular;
}

/// Cohomology of a tree in a given degree, for the shapes computed here.
inline ShiftedIdealSum cohomology_sum(const SchemeExpr& x, int degree) {
  if (x.is_empty()) return {};
  if (const auto cell = as_torus_cell(x)) {
    if (degree != 0) {
      throw Error(ErrorKind::Unsupported,
                  "torus-cell cohomology is only available in degree 0");
    }
    return h0_torus_cells(cell->affine_dim, cell->torus_rank);
  }
  if (const auto* p = x.get_if<expr::ProjTimesTorus>()) {
    return cellular_complex_proj_times_torus(p->proj_dim, p->torus_rank, p->twist, degree).current;
  }
  throw Error(ErrorKind::Unsupported,
              "explicit cohomology is only available for A^n x Gm^d and P^c x Gm^e");
}

}  // namespace linwitt
