#include "dedekind/rational.hpp"

#include "dedekind/error.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <string_view>

namespace dedekind {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw InvalidParameter("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw InvalidParameter("division by zero rational");
  return Rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  BigInt lhs = num_ * o.den_;
  BigInt rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Rational::to_double() const {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  Dec value = Dec(num_) / Dec(den_);
  return value.convert_to<double>();
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

namespace {

// Decimal integer with optional sign. cpp_int's own parser reads a leading 0 as
// octal, so digits are validated and leading zeros stripped first.
BigInt parse_integer(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::runtime_error("not an integer");
  while (text.size() > 1 && text.front() == '0') text.remove_prefix(1);
  const BigInt v{std::string(text)};
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  const auto dot = text.find('.');
  try {
    if (dot != std::string::npos && slash == std::string::npos) {
      // Exact decimal: "0.01" -> 1/100.
      const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
      if (frac.empty() || frac.front() == '-' || frac.front() == '+') throw std::runtime_error("bad decimal");
      const bool negative = !whole.empty() && whole.front() == '-';
      const std::string sign_free = whole.empty() || whole == "-" || whole == "+" ? "0" : whole;
      BigInt scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      BigInt magnitude = parse_integer(sign_free);
      if (magnitude < 0) magnitude = -magnitude;
      magnitude = magnitude * scale + parse_integer(frac);
      return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
    }
    if (slash == std::string::npos) return Rational(parse_integer(text));
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw InvalidParameter("not a rational: '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dedekind
