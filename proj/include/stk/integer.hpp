#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stk {

/// Exact signed integer of unbounded size.
using Integer = mpz_class;

inline bool fits_u64(const Integer& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& n);
Integer from_u64(std::uint64_t v);

/// Exact conversion to int64, or nullopt when out of range.
std::optional<std::int64_t> to_i64(const Integer& n);

/// Decimal parse of an optionally signed integer; throws ParseError.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& n) { return n.get_str(); }

/// Integer power with a machine exponent.
Integer pow(const Integer& base, unsigned long exponent);

/// Number of decimal digits of |n| (0 has one digit).
std::size_t decimal_digits(const Integer& n);

}  // namespace stk
