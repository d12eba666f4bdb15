#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

#include "oracle.hpp"
#include "stk/error.hpp"
#include "stk/gregory.hpp"
#include "stk/serialize.hpp"

using namespace stk;
using namespace stk::gregory;

namespace {

ArcTerm t(long n) { return ArcTerm(Integer(n)); }

GregoryCombo combo_of(const std::map<std::int64_t, std::int64_t>& m) {
  GregoryCombo c;
  for (auto [s, k] : m) c.add(t(s), Integer(static_cast<long>(k)));
  return c;
}

long double arccot(long double x) { return std::atan(1.0L / x); }

const char* const kIdentities[] = {
    "t1 = 4*t5 - t239",
    "t1 = 2*t3 + t7",
    "t1 = 44*t57 + 7*t239 - 12*t682 + 24*t12943",
    "t1 = 5*t7 + 2*t79/3",
};

}  // namespace

TEST_SUITE("gregory") {

TEST_CASE("ArcTerm basics") {
  CHECK(t(5).to_string() == "t5");
  CHECK(ArcTerm(Integer(79), Integer(3)).to_string() == "t79/3");
  CHECK(ArcTerm(Integer(158), Integer(6)) == ArcTerm(Integer(79), Integer(3)));
  CHECK(ArcTerm(Integer(10), Integer(2)) == t(5));
  CHECK(t(5).is_index());
  CHECK(t(5).index() == 5);
  CHECK_THROWS_AS(ArcTerm(Integer(79), Integer(3)).index(), DomainError);
  CHECK(t(1) < t(2));
  CHECK(t(2) < ArcTerm(Integer(79), Integer(3)));
  CHECK(ArcTerm(Integer(79), Integer(3)) < t(239));
  CHECK(t(1).value() == doctest::Approx(std::atan(1.0)));
  CHECK(ArcTerm(Integer(79), Integer(3)).value() == doctest::Approx(std::atan(3.0 / 79)));
  CHECK_THROWS_AS(t(0), DomainError);
  CHECK_THROWS_AS(ArcTerm(Integer(-3), Integer(1)), DomainError);
}

TEST_CASE("GregoryCombo canonical form") {
  GregoryCombo c;
  c.add(GaussianInt(5, 1), Integer(4));
  c.add(GaussianInt(239, -1), Integer(1));  // conjugate flips the sign
  c.add(GaussianInt(7, 0), Integer(9));     // positive real, argument 0
  c.add(GaussianInt(10, 2), Integer(-1));   // content removed: t5
  CHECK(c.to_string() == "3*t5 - t239");
  c.add(t(5), Integer(-3));
  CHECK(c.to_string() == "-t239");
  CHECK(GregoryCombo{}.to_string() == "0");
  CHECK_THROWS_AS(c.add(GaussianInt(-2, 1), Integer(1)), DomainError);
  CHECK((c - c).empty());
  CHECK((c * Integer(0)).empty());
  CHECK(-(-c) == c);
}

TEST_CASE("decompose examples") {
  CHECK(decompose(Integer(3)) == GregoryCombo{{t(1), 1}, {t(2), -1}});
  CHECK(decompose(Integer(21)) == GregoryCombo{{t(4), 1}, {t(5), -1}});
  CHECK(decompose(Integer(70)) == GregoryCombo{{t(2), -1}, {t(5), 2}, {t(12), 1}});
  CHECK(decompose(Integer(239)) == GregoryCombo{{t(1), -1}, {t(5), 4}});
  CHECK(decompose(Integer(2)) == GregoryCombo{{t(2), 1}});
  CHECK(decompose(Integer(1)) == GregoryCombo{{t(1), 1}});
  CHECK(decompose(Integer(70)).to_string() == "-t2 + 2*t5 + t12");
  CHECK_THROWS_AS(decompose(Integer(0)), DomainError);
  CHECK_THROWS_AS(decompose(Integer(-5)), DomainError);
}

TEST_CASE("decompose is sound and uses the basis up to 500") {
  for (long n = 1; n <= 500; ++n) {
    const auto c = decompose(Integer(n));
    REQUIRE(verify_identity(GregoryCombo{{t(n), 1}}, c).holds);
    const bool stormer = oracle::is_stormer(static_cast<std::uint64_t>(n), true);
    if (stormer) {
      REQUIRE(c == GregoryCombo{{t(n), 1}});
      continue;
    }
    for (const auto& [term, coef] : c.terms()) {
      REQUIRE(term.is_index());
      const std::uint64_t s = term.index().get_ui();
      REQUIRE(s < static_cast<std::uint64_t>(n));
      REQUIRE(oracle::is_stormer(s, true));
    }
  }
}

TEST_CASE("decompose matches the valuation oracle up to 200") {
  for (long n = 1; n <= 200; ++n) {
    REQUIRE_MESSAGE(decompose(Integer(n)) == combo_of(oracle::stormer_expansion(n)), "n = " << n);
  }
}

TEST_CASE("decompose handles larger indices") {
  CHECK(decompose(Integer(57)).to_string() == "-2*t1 + 3*t2 + t5");
  CHECK(decompose(Integer(682)).to_string() == "-2*t1 + 3*t2 + 2*t11");
  CHECK(decompose(Integer(12943)).to_string() == "3*t1 - 4*t2 - 3*t5 + t11");
  for (long n : {1000L, 4443L, 10000L, 123456L}) {
    const auto c = decompose(Integer(n));
    CHECK(verify_identity(GregoryCombo{{t(n), 1}}, c).holds);
  }
}

TEST_CASE("Decomposer memo is safe under concurrent use") {
  Decomposer shared;
  std::vector<std::vector<GregoryCombo>> got(4);
  std::vector<std::thread> pool;
  for (int w = 0; w < 4; ++w) {
    pool.emplace_back([&, w] {
      for (long n = 300; n >= 1; --n) got[w].push_back(shared.decompose(Integer(n)));
    });
  }
  for (auto& th : pool) th.join();
  for (int w = 1; w < 4; ++w) CHECK(got[w] == got[0]);
  CHECK(got[0].back() == decompose(Integer(1)));
}

TEST_CASE("verify_identity examples") {
  for (const char* text : kIdentities) {
    const auto r = verify_identity(parse_identity(text));
    CHECK_MESSAGE(r.holds, text);
    CHECK(r.exact);
    CHECK(r.numeric);
    CHECK(sgn(r.certificate.im) == 0);
    CHECK(sgn(r.certificate.re) > 0);
  }
  const auto bad = verify_identity(parse_identity("t1 = 4*t5 + t239"));
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.exact);
  CHECK_FALSE(bad.numeric);
}

TEST_CASE("verify_identity catches 2 pi ambiguities") {
  // 8*t1 = 2π: the Gaussian product (1+i)^8 = 16 is a positive real.
  const auto r = verify_identity(GregoryCombo{{t(1), 8}}, GregoryCombo{});
  CHECK(r.exact);
  CHECK_FALSE(r.numeric);
  CHECK_FALSE(r.holds);
}

TEST_CASE("verify_identity rejects perturbed identities") {
  std::mt19937 rng(1896);
  for (const char* text : kIdentities) {
    const Identity id = parse_identity(text);
    for (int k = 0; k < 10; ++k) {
      GregoryCombo rhs = id.rhs;
      const auto& terms = rhs.terms();
      auto it = terms.begin();
      std::advance(it, std::uniform_int_distribution<long>(0, terms.size() - 1)(rng));
      const ArcTerm term = it->first;
      const Integer coef = it->second;
      const int delta = std::uniform_int_distribution<int>(1, 3)(rng);
      if (k % 2 == 0) {
        rhs.add(term, Integer(-2 * coef));
      } else {
        rhs.add(term, Integer(delta));
      }
      REQUIRE_FALSE(verify_identity(id.lhs, rhs).holds);
    }
  }
}

TEST_CASE("verify_identity ignores positive scaling of representatives") {
  std::mt19937 rng(5);
  for (const char* text : kIdentities) {
    const Identity id = parse_identity(text);
    GregoryCombo scaled;
    for (const auto& [term, coef] : id.rhs.terms()) {
      const long k = std::uniform_int_distribution<long>(2, 50)(rng);
      scaled.add(GaussianInt(term.z().re * k, term.z().im * k), coef);
    }
    CHECK(scaled == id.rhs);
    CHECK(verify_identity(id.lhs, scaled).holds);
  }
}

TEST_CASE("parse_identity and parse_combo") {
  const auto id = parse_identity("  t1=5t7 + 2 * t79/3 ");
  CHECK(id.to_string() == "t1 = 5*t7 + 2*t79/3");
  CHECK(parse_identity("4*t5 - t239 - t1 = 0").rhs.empty());
  CHECK(parse_combo("-t2+2*t5+t12") == decompose(Integer(70)));
  CHECK(parse_combo("t5 - t5").empty());
  CHECK_THROWS_AS(parse_identity("t1 = 4*t5 -"), ParseError);
  CHECK_THROWS_AS(parse_identity("t1 == t2"), ParseError);
  CHECK_THROWS_AS(parse_identity("t1 = t2 = t3"), ParseError);
  CHECK_THROWS_AS(parse_identity("t0 = t1"), ParseError);
  CHECK_THROWS_AS(parse_identity("t1 = 4*x5"), ParseError);
  CHECK_THROWS_AS(parse_identity("t1"), ParseError);
  CHECK_THROWS_AS(parse_combo(""), ParseError);
}

TEST_CASE("combo JSON round-trip") {
  for (const char* text : kIdentities) {
    const auto rhs = parse_identity(text).rhs;
    const auto j = combo_to_json(rhs);
    CHECK(combo_from_json(nlohmann::json::parse(j.dump())) == rhs);
  }
  const auto j = nlohmann::json::parse(R"({"terms":[{"n":5,"coef":4},{"re":239,"im":1,"coef":-1}]})");
  CHECK(combo_from_json(j).to_string() == "4*t5 - t239");
  const auto big = combo_to_json(GregoryCombo{{t(5), Integer("100000000000000000000000")}});
  CHECK(big["terms"][0]["coef"] == "100000000000000000000000");
  CHECK(combo_from_json(big).coefficient(t(5)) == Integer("100000000000000000000000"));
  CHECK_THROWS_AS(combo_from_json(nlohmann::json::parse(R"({"terms":[{"n":0,"coef":1}]})")),
                  ParseError);
  CHECK_THROWS_AS(combo_from_json(nlohmann::json::parse(R"([1,2])")), ParseError);
}

TEST_CASE("flatten examples") {
  auto f = flatten(GaussianInt(18, -5));
  REQUIRE(f.multipliers.size() == 2);
  CHECK(f.multipliers[0] == GaussianInt(7, 2));
  CHECK(f.multipliers[1] == GaussianInt(4, -1));

  f = flatten(GaussianInt(2, 5));
  REQUIRE(f.multipliers.size() == 1);
  CHECK(f.multipliers[0] == GaussianInt(1, -2));
  CHECK(f.w == GaussianInt(12, 1));

  f = flatten(GaussianInt(2, 3));
  REQUIRE(f.multipliers.size() == 1);
  CHECK(f.multipliers[0] == GaussianInt(1, -1));
  CHECK(f.w == GaussianInt(5, 1));

  CHECK_THROWS_AS(flatten(GaussianInt(5, 1)), DomainError);
  CHECK_THROWS_AS(flatten(GaussianInt(4, 6)), DomainError);
  CHECK_THROWS_AS(flatten(GaussianInt(-2, 3)), DomainError);
}

TEST_CASE("flatten steps satisfy their equations and shrink the norm") {
  std::mt19937_64 rng(70);
  std::uniform_int_distribution<long> dist(1, 5000);
  for (auto rule : {FlattenRule::PreferUnitImaginary, FlattenRule::MinimalNorm}) {
    int done = 0;
    while (done < 1500) {
      const long a = dist(rng);
      const long b = dist(rng) * (done % 2 ? 1 : -1);
      if (std::gcd(a, b) != 1 || std::abs(b) == 1 || a * a + b * b <= 2) continue;
      ++done;
      const auto f = flatten(GaussianInt(a, b), rule);
      REQUIRE(!f.steps.empty());
      REQUIRE(f.steps.size() == f.multipliers.size());
      for (std::size_t k = 0; k < f.steps.size(); ++k) {
        const auto& s = f.steps[k];
        REQUIRE(s.input * s.multiplier == s.product);
        REQUIRE(s.product.im == s.rhs);
        REQUIRE((s.rhs == 1 || s.rhs == -1));
        REQUIRE(s.multiplier.norm() < s.input.norm());
        if (k > 0) REQUIRE(s.input == f.steps[k - 1].multiplier);
      }
      REQUIRE(f.w == f.steps.front().product);
    }
  }
}

TEST_CASE("flatten rules") {
  CHECK(parse_flatten_rule("minimal-norm") == FlattenRule::MinimalNorm);
  CHECK(parse_flatten_rule(to_string(FlattenRule::PreferUnitImaginary)) ==
        FlattenRule::PreferUnitImaginary);
  CHECK_THROWS_AS(parse_flatten_rule("shortest"), ParseError);
  // 7d + 2c = ±1 has solutions of norm 10, e.g. 3-i.
  const auto s = flatten_step(GaussianInt(7, 2), FlattenRule::MinimalNorm);
  CHECK(s.multiplier.norm() == 10);
}

TEST_CASE("lehmer_expand examples") {
  auto e = lehmer_expand(Integer(3), Integer(1));
  CHECK(e.cotangents == std::vector<Integer>{3});
  CHECK(e.complete);

  e = lehmer_expand(Integer(8), Integer(3));
  CHECK(e.cotangents == std::vector<Integer>{2, 9, 173});
  CHECK(e.complete);
  CHECK(std::abs(e.evaluate() - (arccot(2) - arccot(9) + arccot(173))) < 1e-15L);
  CHECK(std::abs(std::atan(3.0L / 8.0L) - e.evaluate()) < 1e-12L);

  e = lehmer_expand(Integer(5), Integer(2));
  CHECK(e.cotangents == std::vector<Integer>{2, 12});
  CHECK(std::abs(std::atan(2.0L / 5.0L) - (arccot(2) - arccot(12))) < 1e-12L);

  e = lehmer_expand(Integer(8), Integer(3), 2);
  CHECK_FALSE(e.complete);
  CHECK(e.cotangents.size() == 2);

  CHECK_THROWS_AS(lehmer_expand(Integer(3), Integer(3)), DomainError);
  CHECK_THROWS_AS(lehmer_expand(Integer(6), Integer(4)), DomainError);
  CHECK_THROWS_AS(lehmer_expand(Integer(2), Integer(0)), DomainError);
}

TEST_CASE("lehmer_expand follows the recurrence and sums correctly") {
  for (long a = 2; a <= 120; ++a) {
    for (long b = 1; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto e = lehmer_expand(Integer(a), Integer(b));
      // Replay a_j = n_j b_j + b_{j+1}, a_{j+1} = a_j n_j + b_j.
      Integer aj = a, bj = b;
      for (const Integer& n : e.cotangents) {
        REQUIRE(n == aj / bj);
        const Integer next_b = aj % bj;
        const Integer next_a = aj * n + bj;
        aj = next_a;
        bj = next_b;
      }
      if (!e.complete) continue;
      REQUIRE(bj == 0);
      REQUIRE(std::abs(std::atan(static_cast<long double>(b) / a) - e.evaluate()) < 1e-12L);
    }
  }
}

TEST_CASE("Todd irreducibility and the earlier-occurrence test") {
  CHECK(is_irreducible(Integer(2)));
  CHECK_FALSE(is_irreducible(Integer(3)));
  CHECK_FALSE(is_irreducible(Integer(239)));
  CHECK(occurs_among_earlier(Integer(3)));
  CHECK_FALSE(occurs_among_earlier(Integer(2)));
  CHECK(occurs_among_earlier(Integer(7)));
  CHECK_THROWS_AS(occurs_among_earlier(Integer(1)), DomainError);

  for (std::uint64_t n = 2; n <= 200; ++n) {
    const bool stormer = oracle::is_stormer(n, true);
    bool earlier = true;
    for (auto [q, e] : oracle::factor(n * n + 1)) {
      bool found = false;
      for (std::uint64_t m = 1; m < n && !found; ++m) found = (m * m + 1) % q == 0;
      earlier = earlier && found;
    }
    REQUIRE(occurs_among_earlier(from_u64(n)) == earlier);
    REQUIRE(is_irreducible(from_u64(n)) == stormer);
    // Irreducible exactly when some prime factor of 1 + n² is new.
    REQUIRE(occurs_among_earlier(from_u64(n)) == !stormer);
  }
}

}  // TEST_SUITE
