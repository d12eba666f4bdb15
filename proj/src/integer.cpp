#include "stk/integer.hpp"

#include <cctype>
#include <string>

#include "stk/error.hpp"

namespace stk {

std::uint64_t to_u64(const Integer& n) {
  if (!fits_u64(n)) throw DomainError("integer " + n.get_str() + " does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

Integer from_u64(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

std::optional<std::int64_t> to_i64(const Integer& n) {
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 63) return std::nullopt;
  const std::uint64_t mag = to_u64(abs(n));
  return sgn(n) < 0 ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  Integer out(std::string(text.substr(i)), 10);
  return negative ? Integer(-out) : out;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::size_t decimal_digits(const Integer& n) {
  if (sgn(n) == 0) return 1;
  // mpz_sizeinbase may overshoot by one.
  std::size_t guess = mpz_sizeinbase(n.get_mpz_t(), 10);
  Integer bound = pow(Integer(10), guess - 1);
  return abs(n) < bound ? guess - 1 : guess;
}

}  // namespace stk
