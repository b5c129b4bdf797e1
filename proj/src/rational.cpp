#include "dspan/rational.hpp"

#include <cctype>
#include <numeric>

namespace dspan {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* context) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN)) {
    throw std::overflow_error(std::string("rational overflow in ") + context);
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_normalized(Wide num, Wide den, const char* context) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num, context), narrow(den, context));
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw InputError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  auto bad = [&]() -> InputError { return InputError("malformed rational literal '" + text + "'"); };

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-' || text[pos] == '+') {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size()) throw bad();

  auto read_digits = [&](std::size_t& p) -> Wide {
    if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p]))) throw bad();
    Wide v = 0;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      v = v * 10 + (text[p] - '0');
      if (v > Wide(INT64_MAX)) throw std::overflow_error("rational literal too large: " + text);
      ++p;
    }
    return v;
  };

  Wide intpart = read_digits(pos);
  if (pos == text.size()) {
    std::int64_t n = narrow(negative ? -intpart : intpart, "parse");
    return Rational(n);
  }
  if (text[pos] == '/') {
    ++pos;
    Wide den = read_digits(pos);
    if (pos != text.size()) throw bad();
    return make_normalized(negative ? -intpart : intpart, den, "parse");
  }
  if (text[pos] == '.') {
    ++pos;
    Wide num = intpart;
    Wide den = 1;
    if (pos >= text.size()) throw bad(); // "1." is rejected
    while (pos < text.size()) {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw bad();
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      if (num > Wide(INT64_MAX) || den > Wide(INT64_MAX)) {
        throw std::overflow_error("rational literal too large: " + text);
      }
      ++pos;
    }
    return make_normalized(negative ? -num : num, den, "parse");
  }
  throw bad();
}

std::int64_t Rational::floor() const {
  if (num_ >= 0) return num_ / den_;
  std::int64_t q = num_ / den_;
  return (num_ % den_ == 0) ? q : q - 1;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
  return make_normalized(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_, "+");
}

Rational Rational::operator-(const Rational& o) const {
  return make_normalized(Wide(num_) * o.den_ - Wide(o.num_) * den_, Wide(den_) * o.den_, "-");
}

Rational Rational::operator*(const Rational& o) const {
  return make_normalized(Wide(num_) * o.num_, Wide(den_) * o.den_, "*");
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

bool Rational::operator<(const Rational& o) const {
  return Wide(num_) * o.den_ < Wide(o.num_) * den_;
}

Rational Rational::pow_int(const Rational& base, std::int64_t exp) {
  if (exp < 0) throw InputError("pow_int requires a non-negative exponent");
  Rational result(1);
  for (std::int64_t i = 0; i < exp; ++i) {
    result = result * base;
  }
  return result;
}

} // namespace dspan
