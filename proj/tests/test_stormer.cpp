#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "reference_tables.hpp"
#include "stk/error.hpp"
#include "stk/stormer.hpp"

using namespace stk;
using namespace stk::stormer;

TEST_SUITE("stormer") {

TEST_CASE("is_stormer examples") {
  auto v = is_stormer(Integer(3));
  CHECK_FALSE(v.is_stormer);
  CHECK(v.largest_prime_factor == 5);
  CHECK_FALSE(v.witness_prime.has_value());

  v = is_stormer(Integer(15));
  CHECK(v.is_stormer);
  REQUIRE(v.witness_prime);
  CHECK(*v.witness_prime == 113);

  v = is_stormer(Integer(279));
  CHECK(v.is_stormer);
  CHECK(*v.witness_prime == 38921);

  CHECK(is_stormer(Integer(1), Convention::Inclusive).is_stormer);
  CHECK_FALSE(is_stormer(Integer(1), Convention::Strict).is_stormer);
  CHECK(is_stormer(Integer(1), Convention::Strict).largest_prime_factor == 2);
  CHECK_THROWS_AS(is_stormer(Integer(0)), DomainError);
  CHECK_THROWS_AS(is_stormer(Integer(-4)), DomainError);
}

TEST_CASE("is_stormer matches the definition") {
  for (std::uint64_t x = 1; x <= 3000; ++x) {
    for (auto conv : {Convention::Strict, Convention::Inclusive}) {
      const bool expect = oracle::is_stormer(x, conv == Convention::Inclusive);
      const auto v = is_stormer(from_u64(x), conv);
      REQUIRE(v.is_stormer == expect);
      REQUIRE(v.largest_prime_factor == from_u64(oracle::largest_prime_factor(x * x + 1)));
      REQUIRE(is_stormer_u64(x, conv) == expect);
    }
  }
}

TEST_CASE("is_stormer on large inputs") {
  // 10^20 + 1 = 73 · 137 · 1676321 · 5964848081
  const auto v = is_stormer(Integer("10000000000"));
  CHECK(v.largest_prime_factor == Integer("5964848081"));
  CHECK_FALSE(v.is_stormer);
}

TEST_CASE("stormer_of_prime examples") {
  CHECK(stormer_of_prime(Integer(13)).x0 == 5);
  CHECK(stormer_of_prime(Integer(157)).x0 == 28);
  CHECK(stormer_of_prime(Integer(353)).x0 == 42);
  CHECK(stormer_of_prime(Integer(5)).x0 == 2);
  CHECK(stormer_of_prime(Integer(89)).x0 == 34);
  CHECK(stormer_of_prime(Integer(197)).x0 == 14);
  CHECK_THROWS_AS(stormer_of_prime(Integer(7)), DomainError);
  CHECK_THROWS_AS(stormer_of_prime(Integer(65)), DomainError);
  CHECK_THROWS_AS(stormer_of_prime(Integer(2)), DomainError);
}

TEST_CASE("enumerate_stormer examples") {
  CHECK(enumerate_stormer(16, Convention::Inclusive) ==
        std::vector<std::uint64_t>{1, 2, 4, 5, 6, 9, 10, 11, 12, 14, 15, 16});
  CHECK(enumerate_stormer(1, Convention::Strict).empty());
  CHECK(enumerate_stormer(1, Convention::Inclusive) == std::vector<std::uint64_t>{1});

  // The printed list skips 89 although 89² + 1 = 2 · 17 · 233 and 233 >= 179.
  std::vector<std::uint64_t> expect(ref::kStormerNumbers.begin(), ref::kStormerNumbers.end());
  expect.insert(std::lower_bound(expect.begin(), expect.end(), 89), 89);
  CHECK(enumerate_stormer(107, Convention::Inclusive) == expect);
  CHECK(oracle::is_stormer(89, false));
}

TEST_CASE("enumeration agrees with the polynomial sieve") {
  constexpr std::uint64_t kLimit = 100000;
  const auto lpf = oracle::lpf_of_n2p1(kLimit);
  for (std::uint64_t n : {1, 2, 3, 7, 57, 239, 99999}) {
    REQUIRE(lpf[n] == oracle::largest_prime_factor(n * n + 1));
  }
  for (auto conv : {Convention::Strict, Convention::Inclusive}) {
    std::vector<std::uint64_t> expect;
    for (std::uint64_t n = 1; n <= kLimit; ++n) {
      const std::uint64_t bound = conv == Convention::Strict ? 2 * n + 1 : 2 * n;
      if (lpf[n] >= bound) expect.push_back(n);
    }
    CHECK(enumerate_stormer(kLimit, conv) == expect);
  }
}

TEST_CASE("enumeration does not depend on the worker count") {
  const auto base = enumerate_stormer(30000, Convention::Strict, 1);
  for (unsigned w : {2U, 3U, 8U}) {
    CHECK(enumerate_stormer(30000, Convention::Strict, w) == base);
  }
}

TEST_CASE("enumeration reports progress up to the limit") {
  std::uint64_t last = 0;
  std::uint64_t total = 0;
  enumerate_stormer(5000, Convention::Strict, 2, [&](std::uint64_t done, std::uint64_t all) {
    CHECK(done >= last);
    last = done;
    total = all;
  });
  CHECK(total == 5000);
  CHECK(last == 5000);
}

TEST_CASE("prime_stormer_table examples") {
  CHECK(prime_stormer_table(53) == std::vector<StormerPair>{{5, 2}, {13, 5}, {17, 4}, {29, 12},
                                                             {37, 6}, {41, 9}, {53, 23}});
  CHECK(prime_stormer_table(4).empty());

  // The printed table has (89, 14); 14 belongs to 197, and 34² + 1 = 13 · 89.
  std::vector<StormerPair> expect;
  for (auto [p, x] : ref::kPrimePairs) expect.push_back({from_u64(p), from_u64(p == 89 ? 34 : x)});
  CHECK(prime_stormer_table(373) == expect);
}

TEST_CASE("S is injective and bounded for primes below 10^6") {
  const auto table = prime_stormer_table(1'000'000);
  CHECK(table.size() == 39175);  // primes ≡ 1 mod 4 below 10^6
  std::set<Integer> seen;
  for (const auto& [p, x] : table) {
    REQUIRE(seen.insert(x).second);
    REQUIRE((x * x + 1) % p == 0);
    REQUIRE(x > 1);
    if (p == 5) {
      REQUIRE(2 * x == p - 1);
    } else {
      REQUIRE(2 * x < p - 1);
    }
  }
}

TEST_CASE("check_factor_residues") {
  CHECK(check_factor_residues(Integer(3)));
  CHECK(check_factor_residues(Integer(70)));
  CHECK(check_factor_residues(Integer(1)));
  for (std::uint64_t x = 1; x <= 10000; ++x) {
    REQUIRE(check_factor_residues(from_u64(x)));
    for (auto [q, e] : oracle::factor(x * x + 1)) REQUIRE((q == 2 || q % 4 == 1));
  }
}

TEST_CASE("witness prime maps back to x0") {
  for (std::uint64_t x : enumerate_stormer(5000, Convention::Strict)) {
    const auto v = is_stormer(from_u64(x), Convention::Strict);
    REQUIRE(v.witness_prime);
    REQUIRE(stormer_of_prime(*v.witness_prime).x0 == from_u64(x));
  }
}

TEST_CASE("S(4n^2 + 1) = 2n") {
  int hits = 0;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const std::uint64_t p = 4 * n * n + 1;
    if (!oracle::is_prime(p)) continue;
    ++hits;
    REQUIRE(stormer_of_prime(from_u64(p)).x0 == from_u64(2 * n));
  }
  CHECK(hits > 20);
}

TEST_CASE("convention names") {
  CHECK(parse_convention("strict") == Convention::Strict);
  CHECK(parse_convention(to_string(Convention::Inclusive)) == Convention::Inclusive);
  CHECK_THROWS_AS(parse_convention("loose"), ParseError);
}

}  // TEST_SUITE
