#include "stk/stormer.hpp"

#include <mutex>
#include <string>

#include "stk/arith.hpp"
#include "stk/error.hpp"
#include "stk/parallel.hpp"

namespace stk::stormer {

namespace {

constexpr std::uint64_t kWordLimit = std::uint64_t{1} << 32;  // x² + 1 fits in 64 bits

bool passes(const Integer& x0, const Integer& largest, Convention convention) {
  return convention == Convention::Strict ? 2 * x0 + 1 <= largest : 2 * x0 <= largest;
}

}  // namespace

std::string_view to_string(Convention c) {
  return c == Convention::Strict ? "strict" : "inclusive";
}

Convention parse_convention(std::string_view text) {
  if (text == "strict") return Convention::Strict;
  if (text == "inclusive") return Convention::Inclusive;
  throw ParseError("unknown convention '" + std::string(text) + "' (expected strict|inclusive)");
}

StormerVerdict is_stormer(const Integer& x0, Convention convention) {
  if (sgn(x0) <= 0) throw DomainError("is_stormer: x0 must be positive, got " + x0.get_str());
  const arith::PrimeFactorization f = arith::factorize(Integer(x0 * x0 + 1));
  StormerVerdict v;
  v.x0 = x0;
  v.convention = convention;
  v.largest_prime_factor = *f.largest_prime();
  v.is_stormer = passes(x0, v.largest_prime_factor, convention);
  if (v.is_stormer) v.witness_prime = v.largest_prime_factor;
  return v;
}

bool is_stormer_u64(std::uint64_t x0, Convention convention) {
  if (x0 == 0) throw DomainError("is_stormer: x0 must be positive");
  if (x0 >= kWordLimit) return is_stormer(from_u64(x0), convention).is_stormer;
  const std::uint64_t largest = arith::largest_prime_factor(x0 * x0 + 1);
  return convention == Convention::Strict ? 2 * x0 + 1 <= largest : 2 * x0 <= largest;
}

StormerPair stormer_of_prime(const Integer& p) {
  // sqrt_minus_one_mod_p validates p and returns the smaller root, which is S(p).
  return {p, arith::sqrt_minus_one_mod_p(p)};
}

std::vector<std::uint64_t> enumerate_stormer(std::uint64_t limit, Convention convention,
                                             unsigned workers, const Progress& progress) {
  constexpr std::uint64_t kChunk = 1 << 14;
  if (limit == 0) return {};
  const std::uint64_t chunks = (limit + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> parts(chunks);
  std::mutex progress_mutex;
  std::uint64_t done = 0;
  parallel_chunks(1, limit + 1, kChunk, workers == 0 ? worker_count() : workers,
                  [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t index) {
                    std::vector<std::uint64_t>& out = parts[index];
                    for (std::uint64_t x = lo; x < hi; ++x) {
                      if (is_stormer_u64(x, convention)) out.push_back(x);
                    }
                    if (progress) {
                      std::lock_guard lock(progress_mutex);
                      done += hi - lo;
                      progress(done, limit);
                    }
                  });
  std::vector<std::uint64_t> result;
  for (const auto& part : parts) result.insert(result.end(), part.begin(), part.end());
  return result;
}

std::vector<StormerPair> prime_stormer_table(std::uint64_t prime_limit) {
  std::vector<StormerPair> out;
  for (std::uint64_t p : arith::primes_up_to(prime_limit)) {
    if (p % 4 != 1) continue;
    out.push_back({from_u64(p), from_u64(arith::sqrt_minus_one_mod_p(p))});
  }
  return out;
}

bool check_factor_residues(const Integer& x0) {
  if (sgn(x0) <= 0) throw DomainError("check_factor_residues: x0 must be positive");
  for (const auto& f : arith::factorize(Integer(x0 * x0 + 1)).factors) {
    if (f.prime != 2 && mpz_fdiv_ui(f.prime.get_mpz_t(), 4) != 1) return false;
  }
  return true;
}

}  // namespace stk::stormer
