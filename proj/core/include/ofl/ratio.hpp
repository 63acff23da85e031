#pragma once

#include "ofl/rational.hpp"

#include <compare>
#include <limits>
#include <optional>
#include <string>

namespace ofl {

/// A nonnegative rational extended with +infinity, for welfare ratios whose
/// denominator can vanish.
class Ratio {
 public:
  Ratio() : value_(Rational(1)) {}
  explicit Ratio(Rational value) : value_(std::move(value)) {}
  static Ratio infinity() {
    Ratio r;
    r.value_.reset();
    return r;
  }
  /// num / den, with x / 0 = infinity for x > 0 and 0 / 0 = 1.
  static Ratio of(const Rational& num, const Rational& den) {
    if (den.is_zero()) return num.is_zero() ? Ratio(Rational(1)) : infinity();
    return Ratio(num / den);
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// The finite value; throws std::bad_optional_access when infinite.
  const Rational& value() const { return value_.value(); }
  double to_double() const {
    return value_ ? value_->to_double() : std::numeric_limits<double>::infinity();
  }
  /// "p/q" or "inf".
  std::string str() const { return value_ ? value_->str() : "inf"; }

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.value_ <=> *b.value_;
  }
  friend bool operator==(const Ratio& a, const Rational& b) { return a.value_ && *a.value_ == b; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Rational& b) {
    if (a.is_infinite()) return std::strong_ordering::greater;
    return *a.value_ <=> b;
  }

 private:
  std::optional<Rational> value_;
};

}  // namespace ofl
