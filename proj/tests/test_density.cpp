#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracle.hpp"
#include "stk/density.hpp"
#include "stk/error.hpp"

using namespace stk;
using namespace stk::density;
using stk::stormer::Convention;

TEST_SUITE("density") {

TEST_CASE("small counts agree with the definition") {
  std::uint64_t strict = 0;
  std::uint64_t inclusive = 0;
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    strict += oracle::is_stormer(n, false);
    inclusive += oracle::is_stormer(n, true);
    if (n == 100) {
      CHECK(count_stormer(100, Convention::Strict).count == strict);
      CHECK(count_stormer(100, Convention::Inclusive).count == inclusive);
    }
  }
  CHECK(strict == 719);
  CHECK(inclusive == 720);
  CHECK(count_stormer(1000).count == 719);
  CHECK(count_stormer(1000, Convention::Inclusive).count == 720);
  CHECK(count_stormer(100).count == 69);
  CHECK(count_stormer(100, Convention::Inclusive).count == 70);
}

TEST_CASE("counts to 10^5 agree with the polynomial sieve") {
  const auto lpf = oracle::lpf_of_n2p1(100000);
  std::vector<std::uint64_t> limits{10000, 50000, 100000};
  const auto reports = count_stormer(limits, Convention::Strict);
  REQUIRE(reports.size() == 3);
  for (std::size_t i = 0; i < limits.size(); ++i) {
    std::uint64_t expect = 0;
    for (std::uint64_t n = 1; n <= limits[i]; ++n) expect += lpf[n] >= 2 * n + 1;
    CHECK(reports[i].count == expect);
    CHECK(reports[i].limit == limits[i]);
    CHECK(reports[i].ratio == doctest::Approx(static_cast<double>(expect) / limits[i]));
    CHECK(reports[i].ln2_gap == doctest::Approx(std::abs(reports[i].ratio - std::log(2.0))));
  }
  CHECK(reports[0].count == 7101);
  CHECK(reports[2].count == 70779);
}

TEST_CASE("count_stormer is monotone and bounded") {
  std::vector<std::uint64_t> limits;
  for (std::uint64_t n = 1; n <= 3000; n += 37) limits.push_back(n);
  const auto reports = count_stormer(limits, Convention::Inclusive);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    REQUIRE(reports[i].ratio >= 0.0);
    REQUIRE(reports[i].ratio <= 1.0);
    if (i > 0) REQUIRE(reports[i].count >= reports[i - 1].count);
  }
}

TEST_CASE("multi-limit validation") {
  const std::vector<std::uint64_t> empty;
  const std::vector<std::uint64_t> descending{100, 10};
  const std::vector<std::uint64_t> repeated{10, 10};
  const std::vector<std::uint64_t> zero{0, 10};
  CHECK_THROWS_AS(count_stormer(empty), DomainError);
  CHECK_THROWS_AS(count_stormer(descending), DomainError);
  CHECK_THROWS_AS(count_stormer(repeated), DomainError);
  CHECK_THROWS_AS(count_stormer(zero), DomainError);
}

TEST_CASE("heuristic_probability examples") {
  CHECK(heuristic_probability(2) == 0.5);
  // [7, 10] holds no prime 1 mod 4.
  CHECK(heuristic_probability(3) == 0.0);
  CHECK(heuristic_probability(4) == doctest::Approx(2.0 / 12 + 2.0 / 16));
  CHECK(heuristic_probability(1000) == doctest::Approx(0.5930158523450917).epsilon(1e-14));
  CHECK_THROWS_AS(heuristic_probability(1), DomainError);
  CHECK_THROWS_AS(heuristic_probability(0), DomainError);
}

TEST_CASE("heuristic_probability against direct enumeration") {
  for (std::uint64_t x : {5, 17, 40, 99}) {
    double expect = 0;
    for (std::uint64_t p = 2 * x + 1; p <= x * x + 1; ++p) {
      if (p % 4 == 1 && oracle::is_prime(p)) expect += 2.0 / static_cast<double>(p - 1);
    }
    CHECK(heuristic_probability(x) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("heuristic_probability is a probability") {
  for (std::uint64_t x = 2; x <= 1000; ++x) {
    const double h = heuristic_probability(x);
    if (x == 3) {
      REQUIRE(h == 0.0);
      continue;
    }
    REQUIRE(h > 0.0);
    REQUIRE(h < 1.0);
  }
}

TEST_CASE("heuristic_probability drifts toward ln 2") {
  const double ln2 = std::log(2.0);
  const double g1 = std::abs(heuristic_probability(10) - ln2);
  const double g2 = std::abs(heuristic_probability(100) - ln2);
  const double g3 = std::abs(heuristic_probability(1000) - ln2);
  CHECK(g1 > g2);
  CHECK(g2 > g3);
}

TEST_CASE("mertens_gap") {
  CHECK(mertens_gap(3) == doctest::Approx(0.5 + 1.0 / 3 - std::log(std::log(3.0))));
  CHECK(mertens_gap(10) ==
        doctest::Approx(0.5 + 1.0 / 3 + 0.2 + 1.0 / 7 - std::log(std::log(10.0))));
  CHECK(std::abs(mertens_gap(1'000'000) - 0.2615) < 0.01);
  CHECK_THROWS_AS(mertens_gap(2), DomainError);
}

TEST_CASE("KahanSum keeps small addends") {
  KahanSum k;
  k.add(1.0);
  for (int i = 0; i < 1000000; ++i) k.add(1e-16);
  k.add(-1.0);
  CHECK(k.value() == doctest::Approx(1e-10).epsilon(1e-6));
}

}  // TEST_SUITE
