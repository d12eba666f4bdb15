#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "stk/integer.hpp"

namespace stk {

/// Reduced fraction num/den with den > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const Integer& n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational abs() const { return Rational(::abs(num_), den_); }
  double to_double() const;
  std::string to_string() const;

  /// Accepts "n" or "a/b".
  static Rational parse(std::string_view text);

 private:
  struct Reduced {};
  Rational(Integer num, Integer den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Integer num_;
  Integer den_;
};

}  // namespace stk
