#pragma once

#include <cstdint>
#include <string>

#include "dspan/errors.hpp"

namespace dspan {

/// Exact rational number on int64 numerator/denominator, always normalized
/// (gcd 1, denominator positive). Arithmetic goes through 128-bit
/// intermediates and throws std::overflow_error if a result leaves int64
/// range instead of wrapping.
class Rational {
public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "7", "-3/2", "1.25". Decimal inputs convert exactly.
  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  /// Largest integer <= value.
  std::int64_t floor() const;

  double to_double() const;

  /// Canonical form: "n" when integral, "n/d" otherwise. parse() inverts it.
  std::string to_string() const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  /// base^exp for integer exp >= 0, exact.
  static Rational pow_int(const Rational& base, std::int64_t exp);

private:
  std::int64_t num_;
  std::int64_t den_;
};

} // namespace dspan
