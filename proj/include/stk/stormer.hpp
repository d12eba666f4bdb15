#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "stk/integer.hpp"

namespace stk::stormer {

/// Strict: the largest prime factor p of x²+1 satisfies 2x+1 <= p (so x > 1).
/// Inclusive: 2x <= p, which additionally admits x = 1.
enum class Convention { Strict, Inclusive };

std::string_view to_string(Convention c);
Convention parse_convention(std::string_view text);

struct StormerVerdict {
  Integer x0;
  bool is_stormer = false;
  /// Largest prime factor of x0²+1; set only when is_stormer.
  std::optional<Integer> witness_prime;
  Integer largest_prime_factor;
  Convention convention = Convention::Strict;
};

/// (p, S(p)) with S(p) the root of x² ≡ -1 (mod p) in (1, (p-1)/2].
struct StormerPair {
  Integer p;
  Integer x0;

  friend bool operator==(const StormerPair&, const StormerPair&) = default;
};

/// Classifies x0 >= 1 by the largest prime factor of x0²+1.
StormerVerdict is_stormer(const Integer& x0, Convention convention = Convention::Strict);

/// Fast classification for x0 < 2^32.
bool is_stormer_u64(std::uint64_t x0, Convention convention);

/// S(p). Throws DomainError unless p is a prime ≡ 1 (mod 4).
StormerPair stormer_of_prime(const Integer& p);

using Progress = std::function<void(std::uint64_t done, std::uint64_t total)>;

/// Ascending list of Størmer numbers in [1, limit]. Work is split across
/// `workers` threads (0 = worker_count()); the result does not depend on it.
std::vector<std::uint64_t> enumerate_stormer(std::uint64_t limit,
                                             Convention convention = Convention::Inclusive,
                                             unsigned workers = 0, const Progress& progress = {});

/// (p, S(p)) for all primes p ≡ 1 (mod 4) with p <= prime_limit, ascending in p.
std::vector<StormerPair> prime_stormer_table(std::uint64_t prime_limit);

/// True iff every odd prime factor of x0²+1 is ≡ 1 (mod 4).
bool check_factor_residues(const Integer& x0);

}  // namespace stk::stormer
