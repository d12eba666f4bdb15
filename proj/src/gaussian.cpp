#include "stk/gaussian.hpp"

#include <cctype>

#include "stk/error.hpp"

namespace stk {

GaussianInt& GaussianInt::operator+=(const GaussianInt& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianInt& GaussianInt::operator-=(const GaussianInt& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianInt& GaussianInt::operator*=(const GaussianInt& o) {
  Integer r = re * o.re - im * o.im;
  Integer i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

bool GaussianInt::divides(const GaussianInt& z) const {
  if (is_zero()) return z.is_zero();
  const Integer n = norm();
  const GaussianInt t = z * conj();
  return mpz_divisible_p(t.re.get_mpz_t(), n.get_mpz_t()) &&
         mpz_divisible_p(t.im.get_mpz_t(), n.get_mpz_t());
}

GaussianInt GaussianInt::exact_quotient_of(const GaussianInt& z) const {
  if (is_zero()) throw DomainError("division by zero Gaussian integer");
  const Integer n = norm();
  GaussianInt t = z * conj();
  if (!mpz_divisible_p(t.re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(t.im.get_mpz_t(), n.get_mpz_t())) {
    throw DomainError(to_string() + " does not divide " + z.to_string());
  }
  mpz_divexact(t.re.get_mpz_t(), t.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(t.im.get_mpz_t(), t.im.get_mpz_t(), n.get_mpz_t());
  return t;
}

std::string GaussianInt::to_string() const {
  if (sgn(im) == 0) return re.get_str();
  std::string out;
  if (sgn(re) != 0) out = re.get_str();
  if (sgn(im) > 0 && !out.empty()) out += '+';
  if (sgn(im) < 0) out += '-';
  const Integer mag = abs(im);
  if (mag != 1) out += mag.get_str();
  out += 'i';
  return out;
}

GaussianInt pow(const GaussianInt& base, unsigned long exponent) {
  GaussianInt result(1, 0);
  GaussianInt b = base;
  while (exponent > 0) {
    if (exponent & 1UL) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

GaussianInt parse_gaussian(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto fail = [&] { return ParseError("expected a Gaussian integer like 18-5i, got '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();
  if (s.back() != 'i') return GaussianInt(parse_integer(s), Integer(0));
  s.pop_back();
  // Split before the sign that starts the imaginary part, if any.
  std::size_t split = s.find_last_of("+-");
  Integer re = 0;
  std::string im_text = s;
  if (split != std::string::npos && split > 0) {
    re = parse_integer(s.substr(0, split));
    im_text = s.substr(split);
  }
  if (im_text.empty() || im_text == "+") return GaussianInt(re, Integer(1));
  if (im_text == "-") return GaussianInt(re, Integer(-1));
  try {
    return GaussianInt(re, parse_integer(im_text));
  } catch (const ParseError&) {
    throw fail();
  }
}

namespace {

// Nearest integer to num/den for den > 0, ties rounded up.
Integer round_div(const Integer& num, const Integer& den) {
  Integer twice = 2 * num + den;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Integer(2 * den).get_mpz_t());
  return q;
}

}  // namespace

GaussianInt rounded_quotient(const GaussianInt& a, const GaussianInt& b) {
  if (b.is_zero()) throw DomainError("division by zero Gaussian integer");
  const Integer n = b.norm();
  const GaussianInt t = a * b.conj();
  return {round_div(t.re, n), round_div(t.im, n)};
}

GaussianInt gcd(GaussianInt a, GaussianInt b) {
  while (!b.is_zero()) {
    GaussianInt r = a - rounded_quotient(a, b) * b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FirstQuadrant to_first_quadrant(const GaussianInt& z) {
  if (z.is_zero()) throw DomainError("zero has no argument");
  GaussianInt w = z;
  unsigned k = 0;
  // Rotating by -i maps w to (im, -re); z = i^k · w throughout.
  while (!(sgn(w.re) > 0 && sgn(w.im) >= 0)) {
    w = GaussianInt(w.im, -w.re);
    ++k;
  }
  return {std::move(w), k};
}

}  // namespace stk
