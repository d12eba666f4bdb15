#include <algorithm>
#include <cmath>
#include <vector>

#include "stk/arith.hpp"
#include "stk/error.hpp"

namespace stk::arith {

namespace {

constexpr std::uint32_t kSmallPrimeLimit = 1'000'000;

std::vector<std::uint32_t> sieve_small() {
  std::vector<bool> composite(kSmallPrimeLimit, false);
  std::vector<std::uint32_t> primes;
  primes.reserve(78'498);
  for (std::uint32_t i = 2; i < kSmallPrimeLimit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < kSmallPrimeLimit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

}  // namespace

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> table = sieve_small();
  return table;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < kSmallPrimeLimit) {
    for (std::uint32_t p : small_primes()) {
      if (p > limit) break;
      out.push_back(p);
    }
    return out;
  }
  for_each_prime_in(2, limit, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

void for_each_prime_in(std::uint64_t lo, std::uint64_t hi,
                       const std::function<void(std::uint64_t)>& visit) {
  if (hi < 2 || lo > hi) return;
  lo = std::max<std::uint64_t>(lo, 2);
  const std::uint64_t root = isqrt(hi);
  std::vector<std::uint64_t> base;
  if (root < kSmallPrimeLimit) {
    for (std::uint32_t p : small_primes()) {
      if (p > root) break;
      base.push_back(p);
    }
  } else {
    base = primes_up_to(root);
  }

  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<bool> composite;
  for (std::uint64_t start = lo; start <= hi;) {
    const std::uint64_t end = std::min(hi, start + kSegment - 1);
    composite.assign(end - start + 1, false);
    for (std::uint64_t p : base) {
      if (p * p > end) break;
      std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
      for (std::uint64_t j = first; j <= end; j += p) composite[j - start] = true;
    }
    for (std::uint64_t v = start; v <= end; ++v) {
      if (!composite[v - start]) visit(v);
    }
    if (end == hi) break;
    start = end + 1;
  }
}

}  // namespace stk::arith
