#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "stk/gaussian.hpp"
#include "stk/integer.hpp"

namespace stk::arith {

struct PrimePower {
  Integer prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with primes strictly ascending.
struct PrimeFactorization {
  std::vector<PrimePower> factors;

  Integer value() const;
  const Integer* largest_prime() const {
    return factors.empty() ? nullptr : &factors.back().prime;
  }
};

/// Deterministic primality. Miller–Rabin with a proven witness set covers
/// n < 3.317·10^24; larger inputs fall back to Baillie–PSW.
bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Trial division by small primes, then Brent's variant of Pollard rho.
/// Throws DomainError for n <= 0.
PrimeFactorization factorize(const Integer& n);

/// Machine-word fast path of factorize: ascending (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Largest prime factor of n >= 2 (1 for n == 1).
std::uint64_t largest_prime_factor(std::uint64_t n);

/// g = gcd(a, b) > 0 with u·a + v·b = g. Throws DomainError for (0, 0).
struct Bezout {
  Integer g;
  Integer u;
  Integer v;
};
Bezout extended_gcd(const Integer& a, const Integer& b);

/// Returns x in [1, p-1] with x² ≡ -1 (mod p); the smaller of the two roots.
/// Throws DomainError unless p is a prime ≡ 1 (mod 4).
Integer sqrt_minus_one_mod_p(const Integer& p);
std::uint64_t sqrt_minus_one_mod_p(std::uint64_t p);

/// Gaussian prime factorization z = unit · Π π^e. Each π has re > 0, im >= 0;
/// factors are ordered by (norm, re). Throws DomainError for z = 0.
struct GaussianFactorization {
  GaussianInt unit;
  std::vector<std::pair<GaussianInt, unsigned>> factors;

  GaussianInt value() const;
};
GaussianFactorization gaussian_factorize(const GaussianInt& z);

// --- prime tables --------------------------------------------------------

/// Primes below 10^6, sieved once on first use.
std::span<const std::uint32_t> small_primes();

/// All primes <= limit (plain Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Calls visit(p) for each prime p in [lo, hi], ascending, using a
/// segmented sieve.
void for_each_prime_in(std::uint64_t lo, std::uint64_t hi,
                       const std::function<void(std::uint64_t)>& visit);

}  // namespace stk::arith
