#pragma once

// Construction trees for linear schemes. Nodes are immutable and shared;
// copying a SchemeExpr is cheap.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "linwitt/error.hpp"

namespace linwitt {

/// Opaque line-bundle label. Labels never change group shapes; they only
/// select cellular differential rules. "O(k)" labels expose their degree.
class TwistLabel {
 public:
  TwistLabel() = default;
  explicit TwistLabel(std::string name) : name_(std::move(name)) {}

  static TwistLabel trivial() { return TwistLabel{}; }
  static TwistLabel line_bundle(int k) { return TwistLabel("O(" + std::to_string(k) + ")"); }

  const std::string& name() const noexcept { return name_; }
  bool is_trivial() const noexcept { return name_ == "trivial"; }

  std::optional<int> degree() const {
    if (name_.size() < 4 || name_.rfind("O(", 0) != 0 || name_.back() != ')') {
      return std::nullopt;
    }
    const std::string body = name_.substr(2, name_.size() - 3);
    std::size_t pos = 0;
    try {
      const int k = std::stoi(body, &pos);
      if (pos != body.size()) return std::nullopt;
      return k;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  friend bool operator==(const TwistLabel&, const TwistLabel&) = default;

 private:
  std::string name_ = "trivial";
};

class SchemeExpr;

namespace expr {

struct Empty {
  friend bool operator==(const Empty&, const Empty&) = default;
};

/// Affine space A^N.
struct Affine {
  int dim = 0;
  friend bool operator==(const Affine&, const Affine&) = default;
};

/// A^n x Gm^d.
struct TorusCell {
  int affine_dim = 0;
  int torus_rank = 0;
  friend bool operator==(const TorusCell&, const TorusCell&) = default;
};

/// P^c x Gm^e with a line-bundle label.
struct ProjTimesTorus {
  int proj_dim = 0;
  int torus_rank = 0;
  TwistLabel twist;
  friend bool operator==(const ProjTimesTorus&, const ProjTimesTorus&) = default;
};

struct OpenGlue;
struct ClosedGlue;
struct Product;
struct Stratified;

}  // namespace expr

/// Pair (a, b): stratum a lies in the closure of stratum b.
using ClosureRelation = std::pair<std::size_t, std::size_t>;

class SchemeExpr {
 public:
  struct Node;

  /// Empty scheme.
  SchemeExpr();

  const Node& node() const noexcept { return *node_; }
  int dim() const noexcept;
  bool smooth() const noexcept { return smooth_; }

  /// Copy with the smoothness attribute set; smoothness is asserted by the
  /// caller, never derived.
  SchemeExpr with_smooth(bool smooth) const {
    SchemeExpr out = *this;
    out.smooth_ = smooth;
    return out;
  }

  template <typename Visitor>
  decltype(auto) visit(Visitor&& v) const;

  template <typename T>
  const T* get_if() const noexcept;

  bool is_empty() const noexcept;

  friend bool operator==(const SchemeExpr& a, const SchemeExpr& b);

  /// Wraps a prepared node; use the factory functions below instead.
  static SchemeExpr from_node(std::shared_ptr<const Node> node) { return SchemeExpr(std::move(node)); }

 private:
  explicit SchemeExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
  bool smooth_ = false;
};

namespace expr {

/// ambient \ closed.
struct OpenGlue {
  SchemeExpr ambient;
  SchemeExpr closed;
};

/// Total space glued from a closed part and its open complement.
struct ClosedGlue {
  SchemeExpr closed;
  SchemeExpr open;
};

struct Product {
  SchemeExpr left;
  SchemeExpr right;
};

struct Stratified {
  std::vector<SchemeExpr> strata;
  /// Sorted, duplicate-free generating relations of the closure order.
  std::vector<ClosureRelation> order;
};

}  // namespace expr

struct SchemeExpr::Node {
  std::variant<expr::Empty, expr::Affine, expr::TorusCell, expr::ProjTimesTorus, expr::OpenGlue,
               expr::ClosedGlue, expr::Product, expr::Stratified>
      value;
  int dim = -1;
};

inline SchemeExpr make_node(auto&& alternative, int dim) {
  auto node = std::make_shared<SchemeExpr::Node>();
  node->value = std::forward<decltype(alternative)>(alternative);
  node->dim = dim;
  return SchemeExpr::from_node(std::shared_ptr<const SchemeExpr::Node>(std::move(node)));
}

inline SchemeExpr::SchemeExpr() {
  static const auto empty_node = [] {
    auto n = std::make_shared<Node>();
    n->value = expr::Empty{};
    n->dim = -1;
    return std::shared_ptr<const Node>(n);
  }();
  node_ = empty_node;
}

inline int SchemeExpr::dim() const noexcept { return node_->dim; }

template <typename Visitor>
decltype(auto) SchemeExpr::visit(Visitor&& v) const {
  return std::visit(std::forward<Visitor>(v), node_->value);
}

template <typename T>
const T* SchemeExpr::get_if() const noexcept {
  return std::get_if<T>(&node_->value);
}

inline bool SchemeExpr::is_empty() const noexcept { return get_if<expr::Empty>() != nullptr; }

namespace expr {

inline bool operator==(const OpenGlue& a, const OpenGlue& b) {
  return a.ambient == b.ambient && a.closed == b.closed;
}
inline bool operator==(const ClosedGlue& a, const ClosedGlue& b) {
  return a.closed == b.closed && a.open == b.open;
}
inline bool operator==(const Product& a, const Product& b) {
  return a.left == b.left && a.right == b.right;
}
inline bool operator==(const Stratified& a, const Stratified& b) {
  return a.strata == b.strata && a.order == b.order;
}

}  // namespace expr

inline bool operator==(const SchemeExpr& a, const SchemeExpr& b) {
  if (a.smooth_ != b.smooth_) return false;
  if (a.node_ == b.node_) return true;
  return a.node_->value == b.node_->value;
}

// ---- factories -------------------------------------------------------------

inline void require_non_negative(int value, const char* what) {
  if (value < 0) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be non-negative");
  }
}

inline SchemeExpr empty_scheme() { return SchemeExpr{}; }

inline SchemeExpr affine(int n) {
  require_non_negative(n, "affine dimension");
  return make_node(expr::Affine{n}, n);
}

inline SchemeExpr torus_cell(int n, int d) {
  require_non_negative(n, "affine dimension");
  require_non_negative(d, "torus rank");
  return make_node(expr::TorusCell{n, d}, n + d);
}

inline SchemeExpr proj_times_torus(int c, int e, TwistLabel twist = TwistLabel::trivial()) {
  require_non_negative(c, "projective dimension");
  require_non_negative(e, "torus rank");
  return make_node(expr::ProjTimesTorus{c, e, std::move(twist)}, c + e);
}

/// ambient \ closed. The closed part must have strictly smaller dimension,
/// so the open complement is nonempty whenever the ambient space is.
inline SchemeExpr open_glue(SchemeExpr ambient, SchemeExpr closed) {
  if (ambient.dim() >= 0 && closed.dim() >= ambient.dim()) {
    throw Error(ErrorKind::InvalidArgument,
                "closed part of an open complement must have smaller dimension than the ambient");
  }
  if (ambient.dim() < 0 && closed.dim() >= 0) {
    throw Error(ErrorKind::InvalidArgument, "nonempty closed part in an empty ambient");
  }
  const int d = ambient.dim();
  return make_node(expr::OpenGlue{std::move(ambient), std::move(closed)}, d);
}

inline SchemeExpr closed_glue(SchemeExpr closed, SchemeExpr open) {
  const int d = std::max(closed.dim(), open.dim());
  return make_node(expr::ClosedGlue{std::move(closed), std::move(open)}, d);
}

inline SchemeExpr product(SchemeExpr left, SchemeExpr right) {
  const int d = (left.dim() < 0 || right.dim() < 0) ? -1 : left.dim() + right.dim();
  return make_node(expr::Product{std::move(left), std::move(right)}, d);
}

/// Reflexive-transitive closure of the closure order as a matrix:
/// below[a][b] == true iff stratum a lies in the closure of stratum b.
inline std::vector<std::vector<bool>> closure_matrix(std::size_t count,
                                                     const std::vector<ClosureRelation>& order) {
  std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a) below[a][a] = true;
  for (auto [a, b] : order) {
    if (a >= count || b >= count) {
      throw Error(ErrorKind::InvalidStratification,
                  "closure relation refers to stratum " + std::to_string(std::max(a, b)) +
                      " but there are only " + std::to_string(count));
    }
    below[a][b] = true;
  }
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b)
        if (below[a][k] && below[k][b]) below[a][b] = true;
  return below;
}

/// Checks that `order` generates a partial order with at most one stratum
/// whose closure is everything. Throws InvalidStratification otherwise.
inline void validate_closure_order(std::size_t count, const std::vector<ClosureRelation>& order) {
  const auto below = closure_matrix(count, order);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      if (below[a][b] && below[b][a]) {
        throw Error(ErrorKind::InvalidStratification,
                    "strata " + std::to_string(a) + " and " + std::to_string(b) +
                        " lie in each other's closure");
      }
    }
  }
  std::size_t dense = 0;
  for (std::size_t b = 0; b < count; ++b) {
    bool all = true;
    for (std::size_t a = 0; a < count; ++a) all = all && below[a][b];
    if (all) ++dense;
  }
  if (count > 1 && dense > 1) {
    throw Error(ErrorKind::InvalidStratification, "more than one stratum is dense");
  }
}

inline SchemeExpr stratified(std::vector<SchemeExpr> strata, std::vector<ClosureRelation> order) {
  if (strata.empty()) {
    throw Error(ErrorKind::InvalidStratification, "a stratification needs at least one stratum");
  }
  for (auto [a, b] : order) {
    if (a == b) {
      throw Error(ErrorKind::InvalidStratification, "closure relation of a stratum with itself");
    }
  }
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  validate_closure_order(strata.size(), order);
  const auto below = closure_matrix(strata.size(), order);
  for (std::size_t a = 0; a < strata.size(); ++a) {
    for (std::size_t b = 0; b < strata.size(); ++b) {
      // Boundary strata of a nonempty stratum have smaller dimension.
      if (a != b && below[a][b] && !strata[b].is_empty() && strata[a].dim() >= strata[b].dim()) {
        throw Error(ErrorKind::InvalidStratification,
                    "stratum " + std::to_string(a) + " in the closure of stratum " +
                        std::to_string(b) + " must have smaller dimension");
      }
    }
  }
  int d = -1;
  for (const auto& s : strata) d = std::max(d, s.dim());
  return make_node(expr::Stratified{std::move(strata), std::move(order)}, d);
}

}  // namespace linwitt
