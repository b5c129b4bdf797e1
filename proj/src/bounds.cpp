#include "dspan/bounds.hpp"

#include <cmath>
#include <sstream>

namespace dspan {

namespace {

void require_non_negative(const Rational& r, const char* what) {
  if (r.is_negative()) {
    throw InputError(std::string(what) + " must be non-negative, got " + r.to_string());
  }
}

constexpr std::int64_t kGrid = 1000000000; // 1e-9 rounding grid for power evaluation

Rational power_rounded_up(const Rational& c, const Rational& e, std::int64_t d) {
  double value = c.to_double() * std::pow(static_cast<double>(d), e.to_double());
  double scaled = std::ceil(value * static_cast<double>(kGrid));
  if (!(scaled >= 0) || scaled > 9.0e18) {
    throw std::overflow_error("power evaluation out of range at d = " + std::to_string(d));
  }
  return Rational(static_cast<std::int64_t>(scaled), kGrid);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

} // namespace

ErrorFunction::ErrorFunction(ErrorFamily family, std::vector<Rational> params)
    : family_(family), params_(std::move(params)) {}

ErrorFunction ErrorFunction::constant(const Rational& c) {
  require_non_negative(c, "constant value");
  return ErrorFunction(ErrorFamily::Constant, {c});
}

ErrorFunction ErrorFunction::affine(const Rational& a, const Rational& b) {
  require_non_negative(a, "affine offset");
  require_non_negative(b, "affine slope");
  return ErrorFunction(ErrorFamily::Affine, {a, b});
}

ErrorFunction ErrorFunction::power(const Rational& c, const Rational& e) {
  require_non_negative(c, "power coefficient");
  require_non_negative(e, "power exponent");
  return ErrorFunction(ErrorFamily::Power, {c, e});
}

ErrorFunction ErrorFunction::table(std::vector<Rational> values) {
  if (values.empty()) throw InputError("table needs at least one value");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require_non_negative(values[i], "table value");
    if (i > 0 && values[i] < values[i - 1]) {
      throw InputError("table values must be non-decreasing, got " + values[i - 1].to_string() +
                       " before " + values[i].to_string());
    }
  }
  return ErrorFunction(ErrorFamily::Table, std::move(values));
}

Rational ErrorFunction::evaluate(std::int64_t d) const {
  if (d < 1) throw InputError("error functions are defined for d >= 1");
  switch (family_) {
    case ErrorFamily::Constant:
      return params_[0];
    case ErrorFamily::Affine:
      return params_[0] + params_[1] * Rational(d);
    case ErrorFamily::Power: {
      const Rational& c = params_[0];
      const Rational& e = params_[1];
      if (d == 1) return c;
      if (e.is_integer()) return c * Rational::pow_int(Rational(d), e.num());
      return power_rounded_up(c, e, d);
    }
    case ErrorFamily::Table: {
      std::size_t k = params_.size();
      std::size_t idx = d > static_cast<std::int64_t>(k) ? k - 1 : static_cast<std::size_t>(d - 1);
      return params_[idx];
    }
  }
  throw InvariantError("unknown error-function family");
}

ErrorFunction ErrorFunction::parse(const std::string& spec) {
  auto parts = split(spec, ':');
  const std::string& name = parts[0];
  auto arity = [&](std::size_t want) {
    if (parts.size() != want + 1) {
      throw InputError("'" + name + "' takes " + std::to_string(want) +
                       " parameter(s), got '" + spec + "'");
    }
  };
  if (name == "const") {
    arity(1);
    return constant(Rational::parse(parts[1]));
  }
  if (name == "affine") {
    arity(2);
    return affine(Rational::parse(parts[1]), Rational::parse(parts[2]));
  }
  if (name == "power") {
    arity(2);
    return power(Rational::parse(parts[1]), Rational::parse(parts[2]));
  }
  if (name == "table") {
    arity(1);
    std::vector<Rational> values;
    for (const std::string& v : split(parts[1], ',')) values.push_back(Rational::parse(v));
    return table(std::move(values));
  }
  throw InputError("unknown error function '" + spec +
                   "' (expected const:, affine:, power:, or table:)");
}

std::string ErrorFunction::format() const {
  std::ostringstream out;
  switch (family_) {
    case ErrorFamily::Constant:
      out << "const:" << params_[0].to_string();
      break;
    case ErrorFamily::Affine:
      out << "affine:" << params_[0].to_string() << ":" << params_[1].to_string();
      break;
    case ErrorFamily::Power:
      out << "power:" << params_[0].to_string() << ":" << params_[1].to_string();
      break;
    case ErrorFamily::Table:
      out << "table:";
      for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i > 0) out << ",";
        out << params_[i].to_string();
      }
      break;
  }
  return out.str();
}

Rational evaluate(const ErrorFunction& f, std::int64_t d) { return f.evaluate(d); }

SpannerBound::SpannerBound(BoundKind kind, std::vector<ErrorFunction> fns)
    : kind_(kind), fns_(std::move(fns)) {}

SpannerBound SpannerBound::linear(ErrorFunction alpha, ErrorFunction beta) {
  return SpannerBound(BoundKind::Linear, {std::move(alpha), std::move(beta)});
}

SpannerBound SpannerBound::general(ErrorFunction f) {
  return SpannerBound(BoundKind::General, {std::move(f)});
}

const ErrorFunction& SpannerBound::alpha() const {
  if (kind_ != BoundKind::Linear) throw InvariantError("alpha() on a general bound");
  return fns_[0];
}

const ErrorFunction& SpannerBound::beta() const {
  if (kind_ != BoundKind::Linear) throw InvariantError("beta() on a general bound");
  return fns_[1];
}

const ErrorFunction& SpannerBound::general_f() const {
  if (kind_ != BoundKind::General) throw InvariantError("general_f() on a linear bound");
  return fns_[0];
}

Rational SpannerBound::threshold() const { return at(1); }

Rational SpannerBound::at(std::int64_t d) const {
  if (d < 1) throw InputError("bounds are defined for d >= 1");
  if (kind_ == BoundKind::Linear) {
    return fns_[0].evaluate(d) * Rational(d) + fns_[1].evaluate(d);
  }
  return fns_[0].evaluate(d);
}

std::int64_t SpannerBound::cap_at(std::int64_t d) const { return at(d).floor(); }

SpannerBound SpannerBound::parse(const std::string& spec) {
  if (spec.empty()) throw InputError("empty bound spec");
  auto inner_of = [&](const std::string& prefix) -> std::string {
    if (spec.rfind(prefix + "(", 0) != 0 || spec.back() != ')') {
      throw InputError("malformed bound '" + spec + "'");
    }
    return spec.substr(prefix.size() + 1, spec.size() - prefix.size() - 2);
  };
  if (spec.rfind("linear", 0) == 0) {
    std::string inner = inner_of("linear");
    auto parts = split(inner, ';');
    if (parts.size() != 2) {
      throw InputError("linear bound needs two ';'-separated functions, got '" + spec + "'");
    }
    return linear(ErrorFunction::parse(parts[0]), ErrorFunction::parse(parts[1]));
  }
  if (spec.rfind("general", 0) == 0) {
    return general(ErrorFunction::parse(inner_of("general")));
  }
  throw InputError("unknown bound '" + spec + "' (expected linear(...) or general(...))");
}

std::string SpannerBound::format() const {
  if (kind_ == BoundKind::Linear) {
    return "linear(" + fns_[0].format() + ";" + fns_[1].format() + ")";
  }
  return "general(" + fns_[0].format() + ")";
}

Rational bound_at(const SpannerBound& b, std::int64_t d) { return b.at(d); }

} // namespace dspan
