#pragma once

#include <span>
#include <vector>

#include "stk/integer.hpp"

namespace stk::twosquares {

/// Euclidean-algorithm partial quotients q_1..q_m, all >= 1.
using QuotientSeq = std::vector<Integer>;

/// p = a² + b² with a > b >= 1, obtained from the palindromic continuant
/// expansion [q_1..q_n, q_n..q_1] of p.
struct TwoSquares {
  Integer p;
  Integer a;
  Integer b;
  QuotientSeq palindrome;
  Integer x0;
};

/// Continuant [q_1, ..., q_m] via K_m = q_m·K_{m-1} + K_{m-2}; the empty
/// continuant is 1. Throws DomainError on a non-positive entry.
Integer continuant(std::span<const Integer> qs);

/// Quotients of the Euclidean algorithm on s/r, last quotient absorbing the
/// exact division. Requires s > r >= 1.
QuotientSeq euclid_quotients(const Integer& s, const Integer& r);

/// Smith's construction. Throws DomainError for p ≡ 3 (mod 4) or composite p.
TwoSquares two_squares(const Integer& p);

bool is_even_palindrome(std::span<const Integer> qs);

}  // namespace stk::twosquares
