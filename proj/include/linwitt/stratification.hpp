#pragma once

// Finite point-set models of stratifications. They stand in for actual
// varieties when checking the combinatorics: partitions, the boundary
// condition, and the Venn-type stratification of a union of closed sets.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "linwitt/error.hpp"
#include "linwitt/scheme_calculus.hpp"
#include "linwitt/scheme_expr.hpp"

namespace linwitt {

using Point = std::int64_t;
using PointSet = std::set<Point>;

inline bool is_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool intersects(const PointSet& a, const PointSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

inline PointSet set_intersection(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline PointSet set_difference(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

/// Toy realization of a stratification: each stratum is a set of points and
/// carries the point set of its closure.
struct FinitePosetRealization {
  PointSet ground;
  std::vector<PointSet> pieces;
  std::vector<PointSet> closures;
};

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string message) {
    ok = false;
    failures.push_back(std::move(message));
  }
};

/// Partition and boundary condition of a realization.
inline CheckReport check_realization(const FinitePosetRealization& r) {
  CheckReport report;
  if (r.pieces.size() != r.closures.size()) {
    report.fail("pieces and closures have different lengths");
    return report;
  }
  PointSet covered;
  for (std::size_t a = 0; a < r.pieces.size(); ++a) {
    if (!is_subset(r.pieces[a], r.ground)) report.fail("piece " + std::to_string(a) + " leaves the ground set");
    if (intersects(covered, r.pieces[a])) report.fail("piece " + std::to_string(a) + " overlaps earlier pieces");
    covered.insert(r.pieces[a].begin(), r.pieces[a].end());
    if (!is_subset(r.pieces[a], r.closures[a])) {
      report.fail("piece " + std::to_string(a) + " is not contained in its closure");
    }
    if (!is_subset(r.closures[a], r.ground)) {
      report.fail("closure " + std::to_string(a) + " leaves the ground set");
    }
  }
  if (covered != r.ground) report.fail("pieces do not cover the ground set");
  for (std::size_t a = 0; a < r.pieces.size(); ++a) {
    for (std::size_t b = 0; b < r.pieces.size(); ++b) {
      if (intersects(r.pieces[a], r.closures[b]) && !is_subset(r.pieces[a], r.closures[b])) {
        report.fail("boundary condition fails: piece " + std::to_string(a) + " meets closure " +
                    std::to_string(b) + " without lying in it");
      }
    }
  }
  return report;
}

/// Closure order read off a realization: (a, b) whenever the nonempty piece
/// a lies in the closure of piece b.
inline std::vector<ClosureRelation> closure_order_of(const FinitePosetRealization& r) {
  std::vector<ClosureRelation> order;
  for (std::size_t a = 0; a < r.pieces.size(); ++a) {
    for (std::size_t b = 0; b < r.pieces.size(); ++b) {
      if (a != b && !r.pieces[a].empty() && is_subset(r.pieces[a], r.closures[b])) {
        order.emplace_back(a, b);
      }
    }
  }
  return order;
}

/// Replays the closed decompositions of a stratification tree on the
/// realization. Each split-off stratum must be closed in what remains; the
/// pieces recovered this way must be exactly the input partition.
inline CheckReport replay_stratification_tree(const StratificationTree& st,
                                              const std::vector<SchemeExpr>& strata,
                                              const FinitePosetRealization& r) {
  CheckReport report;
  if (st.leaf_order.size() != strata.size() || r.pieces.size() != strata.size()) {
    report.fail("tree, strata and realization disagree on the number of strata");
    return report;
  }
  std::vector<PointSet> recovered(strata.size());
  PointSet space = r.ground;
  SchemeExpr node = st.tree;
  for (std::size_t step = 0; step < st.leaf_order.size(); ++step) {
    const std::size_t index = st.leaf_order[step];
    const bool last = step + 1 == st.leaf_order.size();
    if (last) {
      if (!(node == strata[index])) report.fail("final leaf is not the expected stratum");
      recovered[index] = space;
      break;
    }
    const auto* glue = node.get_if<expr::ClosedGlue>();
    if (!glue || !(glue->closed == strata[index])) {
      report.fail("step " + std::to_string(step) + " is not a closed decomposition of stratum " +
                  std::to_string(index));
      return report;
    }
    const PointSet closed = set_intersection(r.closures[index], space);
    if (closed != r.pieces[index]) {
      report.fail("stratum " + std::to_string(index) + " is not closed in the remaining space");
    }
    recovered[index] = closed;
    space = set_difference(space, closed);
    node = glue->open;
  }
  for (std::size_t a = 0; a < strata.size(); ++a) {
    if (recovered[a] != r.pieces[a]) {
      report.fail("replay does not reconstruct piece " + std::to_string(a));
    }
  }
  return report;
}

/// Closed subsets A_1..A_n of a finite ground set.
struct SetFamily {
  PointSet ground;
  std::vector<PointSet> sets;
};

struct VennStratum {
  /// 1-based indices J of the sets the stratum lies in.
  std::vector<int> index_set;
  PointSet points;
  /// Intersection of the A_j, j in J; the closure of the stratum when all
  /// these intersections are irreducible.
  PointSet closure;
};

struct VennReport {
  std::vector<VennStratum> strata;
  CheckReport partition;
  CheckReport boundary;

  std::size_t nonempty_count() const {
    return static_cast<std::size_t>(std::count_if(
        strata.begin(), strata.end(), [](const VennStratum& s) { return !s.points.empty(); }));
  }
  bool passed() const { return partition.ok && boundary.ok; }
};

/// The 2^n - 1 strata
///   U_J = (cap_{j in J} A_j) \ (cup_{j not in J} (A_j cap cap_{j in J} A_j))
/// of A_1 u ... u A_n, checked pointwise for the partition property and the
/// boundary condition. Strata are ordered by decreasing |J|, then
/// lexicographically.
inline VennReport venn_stratification(int n, const SetFamily& family) {
  if (n < 1 || n > 20) {
    throw Error(ErrorKind::InvalidArgument, "number of closed sets must lie in [1, 20]");
  }
  if (family.sets.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(n) + " sets, got " +
                                                std::to_string(family.sets.size()));
  }
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    if (!is_subset(family.sets[i], family.ground)) {
      throw Error(ErrorKind::InvalidArgument, "set A_" + std::to_string(i + 1) + " leaves the ground set");
    }
  }

  VennReport report;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask <= full; ++mask) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [n](std::uint32_t a, std::uint32_t b) {
    const int ca = __builtin_popcount(a);
    const int cb = __builtin_popcount(b);
    if (ca != cb) return ca > cb;
    // lexicographic on the sorted index lists
    for (int i = 0; i < n; ++i) {
      const bool ia = a & (1u << i);
      const bool ib = b & (1u << i);
      if (ia != ib) return ia;
    }
    return false;
  });

  PointSet all;
  for (const auto& a : family.sets) all.insert(a.begin(), a.end());

  for (auto mask : masks) {
    VennStratum s;
    PointSet meet = family.ground;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        s.index_set.push_back(i + 1);
        meet = set_intersection(meet, family.sets[static_cast<std::size_t>(i)]);
      }
    }
    PointSet removed;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) {
        removed = set_union(removed, set_intersection(family.sets[static_cast<std::size_t>(i)], meet));
      }
    }
    s.points = set_difference(meet, removed);
    s.closure = meet;
    report.strata.push_back(std::move(s));
  }

  PointSet covered;
  for (const auto& s : report.strata) {
    if (intersects(covered, s.points)) report.partition.fail("strata overlap");
    covered.insert(s.points.begin(), s.points.end());
  }
  if (covered != all) report.partition.fail("strata do not cover the union of the sets");

  auto contains_all = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (const auto& u : report.strata) {
    if (!is_subset(u.points, u.closure)) report.boundary.fail("stratum outside its closure");
    for (const auto& v : report.strata) {
      if (!intersects(v.points, u.closure)) continue;
      if (!contains_all(v.index_set, u.index_set) || !is_subset(v.points, u.closure)) {
        report.boundary.fail("stratum meets a closure without lying in it");
      }
    }
  }
  return report;
}

}  // namespace linwitt
