#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace dedekind {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num) : num_(std::move(num)), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t num) : num_(num), den_(1) {}       // NOLINT(implicit)
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rational& o) const;

  Rational abs() const { return Rational(num_ < 0 ? BigInt(-num_) : num_, den_); }
  double to_double() const;

  // Canonical "num/den" form; integers print with "/1".
  std::string str() const;
  static Rational parse(const std::string& text);

 private:
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dedekind
