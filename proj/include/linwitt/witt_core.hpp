#pragma once

// Symmetric bilinear forms over the reals and their Grothendieck-Witt and
// Witt classes. Over R a form is classified by (rank, signature), W(R) = Z via
// the signature, and I^q(R) = 2^q Z for q >= 0 with I^q = W for q <= 0.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "linwitt/error.hpp"

namespace linwitt {

// Compare through numerator(): boost::rational's mixed rational/int
// comparisons recurse forever under C++20 rewritten operators.
using Rational = boost::rational<std::int64_t>;

/// Diagonal form <a_1, ..., a_r> with nonzero rational entries.
class DiagonalForm {
 public:
  DiagonalForm() = default;

  explicit DiagonalForm(std::vector<Rational> entries) : entries_(std::move(entries)) {
    for (const auto& a : entries_) {
      if (a.numerator() == 0) {
        throw Error(ErrorKind::InvalidForm, "diagonal form has a zero entry");
      }
    }
  }

  DiagonalForm(std::initializer_list<Rational> entries)
      : DiagonalForm(std::vector<Rational>(entries)) {}

  const std::vector<Rational>& entries() const noexcept { return entries_; }
  std::size_t rank() const noexcept { return entries_.size(); }

 private:
  std::vector<Rational> entries_;
};

/// Class in GW(R), stored as (rank, signature). Formal differences may have
/// negative rank, but rank and signature always share parity.
class GWClass {
 public:
  constexpr GWClass() = default;

  GWClass(std::int64_t rank, std::int64_t signature) : rank_(rank), signature_(signature) {
    if ((rank - signature) % 2 != 0) {
      throw Error(ErrorKind::InvalidForm,
                  "rank " + std::to_string(rank) + " and signature " +
                      std::to_string(signature) + " have different parity");
    }
  }

  std::int64_t rank() const noexcept { return rank_; }
  std::int64_t signature() const noexcept { return signature_; }

  /// True when the class is represented by an honest form (not a formal difference).
  bool is_effective() const noexcept {
    return rank_ >= 0 && signature_ <= rank_ && -signature_ <= rank_;
  }

  friend bool operator==(const GWClass&, const GWClass&) = default;

 private:
  std::int64_t rank_ = 0;
  std::int64_t signature_ = 0;
};

inline GWClass operator+(const GWClass& a, const GWClass& b) {
  return GWClass(a.rank() + b.rank(), a.signature() + b.signature());
}

inline GWClass operator-(const GWClass& a) { return GWClass(-a.rank(), -a.signature()); }

// Tensor product: rank and signature are both multiplicative over R.
inline GWClass operator*(const GWClass& a, const GWClass& b) {
  return GWClass(a.rank() * b.rank(), a.signature() * b.signature());
}

inline GWClass gw_add(const GWClass& a, const GWClass& b) { return a + b; }
inline GWClass gw_mul(const GWClass& a, const GWClass& b) { return a * b; }

inline GWClass gw_class(const DiagonalForm& form) {
  std::int64_t positive = 0;
  std::int64_t negative = 0;
  for (const auto& a : form.entries()) {
    if (a.numerator() > 0) {
      ++positive;
    } else {
      ++negative;
    }
  }
  return GWClass(positive + negative, positive - negative);
}

/// Element of W(R) = Z, identified with its signature.
class WittClass {
 public:
  constexpr WittClass() = default;
  constexpr explicit WittClass(std::int64_t signature) : signature_(signature) {}

  constexpr std::int64_t signature() const noexcept { return signature_; }

  friend constexpr bool operator==(const WittClass&, const WittClass&) = default;

 private:
  std::int64_t signature_ = 0;
};

inline WittClass operator+(WittClass a, WittClass b) {
  return WittClass(a.signature() + b.signature());
}
inline WittClass operator*(WittClass a, WittClass b) {
  return WittClass(a.signature() * b.signature());
}

inline WittClass witt_class(const GWClass& a) { return WittClass(a.signature()); }

/// Power q of the fundamental ideal. Negative q is allowed and denotes W.
struct IdealLevel {
  int q = 0;

  /// log2 of the index of I^q(R) = 2^{max(q,0)} Z inside W(R) = Z.
  constexpr int generator_log2() const noexcept { return q > 0 ? q : 0; }

  friend constexpr auto operator<=>(const IdealLevel&, const IdealLevel&) = default;
};

inline bool in_ideal_power(WittClass w, IdealLevel level) {
  if (level.q <= 0) return true;
  if (w.signature() == 0) return true;
  if (level.q >= 63) return false;
  const std::int64_t modulus = std::int64_t{1} << level.q;
  return w.signature() % modulus == 0;
}

/// Order of Ibar^q(R) = I^q(R) / I^{q+1}(R): 2 for q >= 0, trivial for q < 0.
inline std::int64_t ibar_order(IdealLevel level) {
  const int log2 = IdealLevel{level.q + 1}.generator_log2() - level.generator_log2();
  return std::int64_t{1} << log2;
}

/// Pfister form <<a>> = <a, -1>.
inline GWClass pfister(const Rational& a) {
  if (a.numerator() == 0) {
    throw Error(ErrorKind::InvalidForm, "Pfister form <<0>> is undefined");
  }
  return gw_class(DiagonalForm{a, Rational(-1)});
}

/// Multiplication by <<-1>> = <-1,-1>, whose signature is -2. It carries
/// I^q(R) onto I^{q+1}(R) for q >= 0.
inline WittClass mult_pfister_minus_one(WittClass w) {
  return w * witt_class(pfister(Rational(-1)));
}

/// Capabilities of the base field consumed by the range engine. The only
/// datum used is whether <<-1>> : Ibar^j(F) -> Ibar^{j+1}(F) is bijective
/// for every j >= 0; it holds for R and fails e.g. for finite fields, where
/// I^2 = 0.
struct FieldCapability {
  std::string name;
  bool pfister_iso_on_ibar = true;

  static FieldCapability real_numbers() { return {"R", true}; }
  static FieldCapability finite_field() { return {"F_q", false}; }
};

}  // namespace linwitt
