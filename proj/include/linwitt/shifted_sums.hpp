#pragma once

// Level-graded groups of the form  j |-> (+)_s I^{j-s}(R)^{m_s}  together
// with the <<-1>>-transition maps between consecutive levels. The maps act
// summand by summand; on a summand they are multiplication by -2 between
// sublattices 2^{max(j-s,0)} Z -> 2^{max(j-s+1,0)} Z of Z.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linwitt/abelian_group.hpp"
#include "linwitt/error.hpp"
#include "linwitt/witt_core.hpp"

namespace linwitt {

inline std::int64_t pow2(int k) {
  if (k < 0 || k > 62) {
    throw Error(ErrorKind::InvalidArgument, "2^" + std::to_string(k) + " out of range");
  }
  return std::int64_t{1} << k;
}

/// One term I^q(R)^m of an evaluated sum.
struct IdealSummand {
  IdealLevel level;
  std::int64_t multiplicity = 0;

  friend bool operator==(const IdealSummand&, const IdealSummand&) = default;
};

/// Rendering of I^q(R) as a sublattice of Z: "Z", "2Z", "4Z", ...
inline std::string render_ideal(IdealLevel level) {
  const int k = level.generator_log2();
  return k == 0 ? std::string("Z") : std::to_string(pow2(k)) + "Z";
}

inline std::string render_evaluation(const std::vector<IdealSummand>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    std::string piece = render_ideal(t.level);
    if (t.multiplicity > 1) piece = "(" + piece + ")^" + std::to_string(t.multiplicity);
    out += piece;
  }
  return out;
}

class ShiftedIdealSum {
 public:
  ShiftedIdealSum() = default;

  /// Pairs (shift, multiplicity); repeated shifts are merged, multiplicities
  /// must be positive.
  ShiftedIdealSum(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    for (auto [s, m] : terms) add(s, m);
  }

  void add(int shift, std::int64_t multiplicity) {
    if (multiplicity <= 0) {
      throw Error(ErrorKind::InvalidArgument, "summand multiplicity must be positive");
    }
    summands_[shift] += multiplicity;
  }

  const std::map<int, std::int64_t>& summands() const noexcept { return summands_; }
  bool empty() const noexcept { return summands_.empty(); }

  std::int64_t total_multiplicity() const noexcept {
    std::int64_t n = 0;
    for (const auto& [s, m] : summands_) n += m;
    return n;
  }

  std::optional<int> max_shift() const noexcept {
    if (summands_.empty()) return std::nullopt;
    return summands_.rbegin()->first;
  }

  ShiftedIdealSum shifted_by(int offset) const {
    ShiftedIdealSum out;
    for (const auto& [s, m] : summands_) out.add(s + offset, m);
    return out;
  }

  friend bool operator==(const ShiftedIdealSum&, const ShiftedIdealSum&) = default;

 private:
  std::map<int, std::int64_t> summands_;
};

/// The group at level j, one entry per shift in increasing shift order.
inline std::vector<IdealSummand> evaluate(const ShiftedIdealSum& sum, int level) {
  std::vector<IdealSummand> out;
  out.reserve(sum.summands().size());
  for (const auto& [s, m] : sum.summands()) out.push_back({IdealLevel{level - s}, m});
  return out;
}

enum class StepKind { Iso, InjectiveNotSurjective };

inline const char* to_string(StepKind k) {
  return k == StepKind::Iso ? "ISO" : "INJECTIVE_NOT_SURJECTIVE";
}

struct StepVerdict {
  StepKind kind = StepKind::Iso;
  AbelianGroup cokernel;
};

/// <<-1>> : level j -> level j+1 on I-coefficients. A summand with j < s is
/// W -> W, multiplication by -2, with cokernel Z/2.
inline StepVerdict step_verdict(const ShiftedIdealSum& sum, int level) {
  std::int64_t defect = 0;
  for (const auto& [s, m] : sum.summands()) {
    if (level < s) defect += m;
  }
  if (defect == 0) return {StepKind::Iso, AbelianGroup::trivial()};
  return {StepKind::InjectiveNotSurjective,
          AbelianGroup::from_cyclic_orders(0, std::vector<std::int64_t>(defect, 2))};
}

/// The same step on the graded pieces Ibar^{j-s} = I^{j-s}/I^{j-s+1}. Only
/// summands with s = j+1 fail: they go from Ibar^{-1} = 0 onto Ibar^0 = Z/2.
inline StepVerdict ibar_step_verdict(const ShiftedIdealSum& sum, int level) {
  const auto it = sum.summands().find(level + 1);
  if (it == sum.summands().end()) return {StepKind::Iso, AbelianGroup::trivial()};
  return {StepKind::InjectiveNotSurjective,
          AbelianGroup::from_cyclic_orders(0, std::vector<std::int64_t>(it->second, 2))};
}

/// Cokernel of the composite of the steps from level `from` to level `to`.
/// A summand contributes Z/2^{min(max(s-from,0), to-from)} per copy.
inline AbelianGroup composite_cokernel(const ShiftedIdealSum& sum, int from, int to) {
  if (to < from) {
    throw Error(ErrorKind::InvalidArgument,
                "composite cokernel needs target level >= source level");
  }
  std::vector<std::int64_t> orders;
  for (const auto& [s, m] : sum.summands()) {
    const int k = std::min(std::max(s - from, 0), to - from);
    if (k == 0) continue;
    orders.insert(orders.end(), static_cast<std::size_t>(m), pow2(k));
  }
  return AbelianGroup::from_cyclic_orders(0, orders);
}

/// Exponent of the cokernel from level `from` into the stable group.
inline std::int64_t cokernel_exponent(const ShiftedIdealSum& sum, int from) {
  const auto top = sum.max_shift();
  if (!top) return 1;
  return pow2(std::max(0, *top - from));
}

}  // namespace linwitt
