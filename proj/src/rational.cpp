#include "stk/rational.hpp"

#include "stk/error.hpp"

namespace stk {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  Integer g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (sgn(b.num_) == 0) throw DomainError("division by zero rational");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(Integer(a.num_ * b.den_), Integer(b.num_ * a.den_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

double Rational::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

std::string Rational::to_string() const {
  return den_ == 1 ? num_.get_str() : num_.get_str() + "/" + den_.get_str();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

}  // namespace stk
