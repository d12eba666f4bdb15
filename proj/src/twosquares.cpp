#include "stk/twosquares.hpp"

#include <algorithm>

#include "stk/arith.hpp"
#include "stk/error.hpp"
#include "stk/stormer.hpp"

namespace stk::twosquares {

Integer continuant(std::span<const Integer> qs) {
  Integer prev = 1;  // K_{m-2}, starting from the empty continuant
  Integer cur = 1;   // K_{m-1}
  bool first = true;
  for (const Integer& q : qs) {
    if (sgn(q) <= 0) throw DomainError("continuant entries must be positive, got " + q.get_str());
    if (first) {
      cur = q;
      first = false;
      continue;
    }
    Integer next = q * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QuotientSeq euclid_quotients(const Integer& s, const Integer& r) {
  if (sgn(r) <= 0 || r >= s) {
    throw DomainError("euclid_quotients needs s > r >= 1, got s=" + s.get_str() + ", r=" + r.get_str());
  }
  QuotientSeq out;
  Integer x = s, y = r, q, rem;
  while (sgn(y) != 0) {
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    out.push_back(q);
    x = std::move(y);
    y = std::move(rem);
  }
  return out;
}

bool is_even_palindrome(std::span<const Integer> qs) {
  return qs.size() % 2 == 0 && std::equal(qs.begin(), qs.begin() + qs.size() / 2, qs.rbegin());
}

TwoSquares two_squares(const Integer& p) {
  if (sgn(p) > 0 && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
    throw DomainError(p.get_str() + " = 3 (mod 4): no representation as a sum of two squares exists");
  }
  if (mpz_fdiv_ui(p.get_mpz_t(), 4) != 1 || !arith::is_prime(p)) {
    throw DomainError("two_squares needs a prime p = 1 (mod 4), got " + p.get_str());
  }
  const Integer x0 = stormer::stormer_of_prime(p).x0;
  QuotientSeq qs = euclid_quotients(p, x0);
  if (!is_even_palindrome(qs)) {
    // Alternate tail: [..., q_n] -> [..., q_n - 1, 1].
    QuotientSeq alt = qs;
    alt.back() -= 1;
    alt.push_back(1);
    if (!is_even_palindrome(alt)) {
      throw std::logic_error("no palindromic continuant expansion for p = " + p.get_str());
    }
    qs = std::move(alt);
  }
  const std::size_t n = qs.size() / 2;
  const std::span<const Integer> all(qs);
  TwoSquares out;
  out.p = p;
  out.a = continuant(all.first(n));
  out.b = continuant(all.first(n - 1));
  out.x0 = x0;
  out.palindrome = std::move(qs);
  if (out.a * out.a + out.b * out.b != p) {
    throw std::logic_error("continuant identity failed for p = " + p.get_str());
  }
  return out;
}

}  // namespace stk::twosquares
