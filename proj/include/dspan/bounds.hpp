#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dspan/rational.hpp"

namespace dspan {

enum class ErrorFamily { Constant, Affine, Power, Table };

/// Monotone non-decreasing function from positive integers to non-negative
/// rationals. Four families:
///
///   constant c        f(d) = c
///   affine a, b       f(d) = a + b*d
///   power c, e        f(d) = c * d^e, e >= 0
///   table v1..vk      f(d) = v_d for d <= k, v_k beyond
///
/// All parameters are non-negative; table entries must be non-decreasing.
/// Evaluation is exact rational arithmetic except power with a non-integer
/// exponent at d >= 2, which is computed in double and rounded up onto a
/// 1e-9 grid (directed rounding; comparisons against such values carry that
/// documented tolerance). At d = 1 every family is exact.
class ErrorFunction {
public:
  static ErrorFunction constant(const Rational& c);
  static ErrorFunction affine(const Rational& a, const Rational& b);
  static ErrorFunction power(const Rational& c, const Rational& e);
  static ErrorFunction table(std::vector<Rational> values);

  ErrorFamily family() const { return family_; }
  const std::vector<Rational>& params() const { return params_; }

  Rational evaluate(std::int64_t d) const;

  /// Mini-grammar: `const:<c>` | `affine:<a>:<b>` | `power:<c>:<e>` |
  /// `table:<v1>,<v2>,...` with rationals as `n/d` or exact decimals.
  static ErrorFunction parse(const std::string& spec);
  std::string format() const;

  friend bool operator==(const ErrorFunction&, const ErrorFunction&) = default;

private:
  ErrorFunction(ErrorFamily family, std::vector<Rational> params);

  ErrorFamily family_;
  std::vector<Rational> params_;
};

Rational evaluate(const ErrorFunction& f, std::int64_t d);

enum class BoundKind { Linear, General };

/// Distance bound for spanner verification.
///
///   linear(alpha; beta)  bound(d) = alpha(d)*d + beta(d), threshold t = alpha(1) + beta(1)
///   general(f)           bound(d) = f(d),                 threshold t = f(1)
///
/// The threshold drives both the trivial-No rule (t < 2) and the reduction's
/// contraction/subdivision case split.
class SpannerBound {
public:
  static SpannerBound linear(ErrorFunction alpha, ErrorFunction beta);
  static SpannerBound general(ErrorFunction f);

  BoundKind kind() const { return kind_; }
  const ErrorFunction& alpha() const;
  const ErrorFunction& beta() const;
  const ErrorFunction& general_f() const;

  Rational threshold() const;
  Rational at(std::int64_t d) const;

  /// Largest integer path length satisfying the bound at original distance
  /// d. Distances are integral, so dist <= at(d) and dist <= cap_at(d) are
  /// the same test.
  std::int64_t cap_at(std::int64_t d) const;

  /// Mini-grammar: `linear(<spec>;<spec>)` | `general(<spec>)`.
  static SpannerBound parse(const std::string& spec);
  std::string format() const;

  friend bool operator==(const SpannerBound&, const SpannerBound&) = default;

private:
  SpannerBound(BoundKind kind, std::vector<ErrorFunction> fns);

  BoundKind kind_;
  std::vector<ErrorFunction> fns_;
};

Rational bound_at(const SpannerBound& b, std::int64_t d);

} // namespace dspan
