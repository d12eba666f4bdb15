#pragma once

#include <string>
#include <string_view>

#include "stk/integer.hpp"

namespace stk {

/// Gaussian integer re + im·i.
struct GaussianInt {
  Integer re{0};
  Integer im{0};

  GaussianInt() = default;
  GaussianInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}
  GaussianInt(long r, long i) : re(r), im(i) {}

  static GaussianInt unit_i() { return {0, 1}; }

  Integer norm() const { return re * re + im * im; }
  GaussianInt conj() const { return {re, -im}; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_unit() const { return norm() == 1; }

  GaussianInt operator-() const { return {-re, -im}; }
  GaussianInt& operator+=(const GaussianInt& o);
  GaussianInt& operator-=(const GaussianInt& o);
  GaussianInt& operator*=(const GaussianInt& o);

  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }

  /// True iff this divides z exactly in Z[i].
  bool divides(const GaussianInt& z) const;
  /// z / this; throws DomainError unless the division is exact.
  GaussianInt exact_quotient_of(const GaussianInt& z) const;

  /// Renders as e.g. "18-5i", "i", "-1", "4+i".
  std::string to_string() const;
};

GaussianInt pow(const GaussianInt& base, unsigned long exponent);

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i", "4-i". Throws ParseError.
GaussianInt parse_gaussian(std::string_view text);

/// Quotient of a / b rounded componentwise to the nearest Gaussian integer.
GaussianInt rounded_quotient(const GaussianInt& a, const GaussianInt& b);

/// Greatest common divisor (defined up to a unit).
GaussianInt gcd(GaussianInt a, GaussianInt b);

/// Multiplies by i^k (k taken mod 4) so that the result has re > 0, im >= 0.
/// Returns the rotated value and the exponent k with z = i^k · result.
struct FirstQuadrant {
  GaussianInt value;
  unsigned quarter_turns;
};
FirstQuadrant to_first_quadrant(const GaussianInt& z);

}  // namespace stk
