#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "linwitt/error.hpp"

namespace linwitt {

/// Finitely generated abelian group Z^r + Z/t_1 + ... + Z/t_k with the
/// torsion kept in invariant-factor form (t_1 | t_2 | ... | t_k, all t_i >= 2).
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Normalizes an arbitrary list of cyclic orders. Orders equal to 1 are
  /// dropped; orders < 1 are rejected.
  static AbelianGroup from_cyclic_orders(std::int64_t free_rank,
                                         const std::vector<std::int64_t>& orders) {
    if (free_rank < 0) {
      throw Error(ErrorKind::InvalidArgument, "negative free rank");
    }
    AbelianGroup g;
    g.free_rank_ = free_rank;
    g.torsion_ = invariant_factors(orders);
    return g;
  }

  static AbelianGroup trivial() { return {}; }

  std::int64_t free_rank() const noexcept { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const noexcept { return torsion_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  /// Smallest positive integer killing the group; 0 if the group is infinite.
  std::int64_t exponent() const noexcept {
    if (free_rank_ > 0) return 0;
    return torsion_.empty() ? 1 : torsion_.back();
  }

  /// Order of a finite group; 0 if infinite.
  std::int64_t order() const noexcept {
    if (free_rank_ > 0) return 0;
    std::int64_t n = 1;
    for (auto t : torsion_) n *= t;
    return n;
  }

  std::string to_string() const {
    std::vector<std::string> parts;
    if (free_rank_ == 1) parts.push_back("Z");
    if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
    std::size_t i = 0;
    while (i < torsion_.size()) {
      std::size_t k = i;
      while (k < torsion_.size() && torsion_[k] == torsion_[i]) ++k;
      std::string part = "Z/" + std::to_string(torsion_[i]);
      if (k - i > 1) part = "(" + part + ")^" + std::to_string(k - i);
      parts.push_back(part);
      i = k;
    }
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t p = 1; p < parts.size(); ++p) out += " + " + parts[p];
    return out;
  }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  static std::vector<std::int64_t> invariant_factors(const std::vector<std::int64_t>& orders) {
    // prime -> exponents of the primary cyclic pieces
    std::map<std::int64_t, std::vector<int>> primary;
    for (auto n : orders) {
      if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "cyclic order must be positive");
      }
      for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
          n /= p;
          ++e;
        }
        if (e > 0) primary[p].push_back(e);
      }
      if (n > 1) primary[n].push_back(1);
    }
    std::size_t count = 0;
    for (auto& [p, exps] : primary) {
      std::sort(exps.begin(), exps.end(), std::greater<>());
      count = std::max(count, exps.size());
    }
    // The k-th largest invariant factor collects the k-th largest power of each prime.
    std::vector<std::int64_t> factors(count, 1);
    for (const auto& [p, exps] : primary) {
      for (std::size_t k = 0; k < exps.size(); ++k) {
        for (int e = 0; e < exps[k]; ++e) factors[k] *= p;
      }
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
  }

  std::int64_t free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

}  // namespace linwitt
