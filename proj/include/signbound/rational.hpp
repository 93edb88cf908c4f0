#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace signbound {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  double to_double() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  bool is_integer() const { return den_ == 1; }
  BigInt floor() const;
  BigInt ceil() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  BigInt num_{0};
  BigInt den_{1};
};

/// Parses "p", "-p" or "p/q". Throws InvalidInput on malformed text.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace signbound
