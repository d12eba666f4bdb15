#include <algorithm>
#include <array>
#include <numeric>

#include "montgomery.hpp"
#include "stk/arith.hpp"
#include "stk/error.hpp"

namespace stk::arith {

using detail::Montgomery;
using detail::u128;
using detail::u64;

namespace {

// Proven deterministic for all n < 2^64 (Sinclair's base set).
constexpr std::array<u64, 7> kU64Bases = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};

// The first 13 primes are a deterministic witness set below this bound
// (Sorenson–Webster).
const Integer& mr13_bound() {
  static const Integer bound("3317044064679887385961981", 10);
  return bound;
}
constexpr std::array<unsigned long, 13> kBigBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Trial division is by odd primes below this bound on the machine-word path.
constexpr u64 kTrialBound = 1024;

struct TrialDivisor {
  u64 p;
  u64 inverse;  // p^{-1} mod 2^64
  u64 limit;    // floor((2^64 - 1) / p)
};

const std::vector<TrialDivisor>& trial_divisors() {
  static const std::vector<TrialDivisor> table = [] {
    std::vector<TrialDivisor> out;
    for (std::uint32_t p : small_primes()) {
      if (p == 2) continue;
      if (p >= kTrialBound) break;
      u64 inv = p;
      for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
      out.push_back({p, inv, ~u64{0} / p});
    }
    return out;
  }();
  return table;
}

bool miller_rabin_u64(u64 n) {
  const Montgomery mt(n);
  const u64 minus_one = mt.to(n - 1);
  const int s = __builtin_ctzll(n - 1);
  const u64 d = (n - 1) >> s;
  for (u64 a : kU64Bases) {
    a %= n;
    if (a == 0) continue;
    u64 x = mt.pow(mt.to(a), d);
    if (x == mt.one() || x == minus_one) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mt.mul(x, x);
      if (x == minus_one) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool miller_rabin_big(const Integer& n) {
  const Integer n_minus_one = n - 1;
  const mp_bitcnt_t s = mpz_scan1(n_minus_one.get_mpz_t(), 0);
  Integer d;
  mpz_fdiv_q_2exp(d.get_mpz_t(), n_minus_one.get_mpz_t(), s);
  Integer x;
  for (unsigned long a : kBigBases) {
    Integer base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_one) continue;
    bool witness = true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n_minus_one) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 brent_rho(u64 n) {
  const Montgomery mt(n);
  constexpr u64 kBatch = 128;
  for (u64 c0 = 1;; ++c0) {
    const u64 c = mt.to(c0);
    auto f = [&](u64 v) { return mt.add(mt.mul(v, v), c); };
    u64 y = mt.to(2), x = y, ys = y, q = mt.one(), g = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const u64 steps = std::min(kBatch, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = f(y);
          q = mt.mul(q, x > y ? x - y : y - x);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = brent_rho(n);
  split_u64(d, out);
  split_u64(n / d, out);
}

Integer brent_rho_big(const Integer& n) {
  Integer g, q, diff;
  for (unsigned long c = 1;; ++c) {
    auto f = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    Integer y = 2, x = 2, ys = 2;
    q = 1;
    g = 1;
    constexpr unsigned long kBatch = 128;
    for (unsigned long r = 1; g == 1; r <<= 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const unsigned long steps = std::min(kBatch, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = f(y);
          diff = abs(x - y);
          q = q * diff % n;
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(Integer(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_big(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (fits_u64(n)) {
    std::vector<u64> parts;
    split_u64(to_u64(n), parts);
    for (u64 p : parts) out.push_back(from_u64(p));
    return;
  }
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const Integer d = brent_rho_big(n);
  split_big(d, out);
  split_big(Integer(n / d), out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  return miller_rabin_u64(n);
}

bool is_prime(const Integer& n) {
  if (sgn(n) <= 0) return false;
  if (fits_u64(n)) return is_prime(to_u64(n));
  if (mpz_even_p(n.get_mpz_t())) return false;
  if (n < mr13_bound()) return miller_rabin_big(n);
  // Baillie–PSW plus extra Miller–Rabin rounds; no counterexample is known.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  std::vector<u64> primes;
  if (n % 2 == 0) {
    const int twos = __builtin_ctzll(n);
    primes.insert(primes.end(), twos, 2);
    n >>= twos;
  }
  for (const TrialDivisor& t : trial_divisors()) {
    if (t.p * t.p > n) break;
    while (n * t.inverse <= t.limit) {
      primes.push_back(t.p);
      n = n * t.inverse;  // exact division
    }
  }
  if (n > 1) {
    if (n < kTrialBound * kTrialBound) {
      primes.push_back(n);
    } else {
      split_u64(n, primes);
    }
  }
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::uint64_t largest_prime_factor(std::uint64_t n) {
  if (n == 1) return 1;
  return factorize(n).back().first;
}

PrimeFactorization factorize(const Integer& n) {
  if (sgn(n) <= 0) throw DomainError("factorize: n must be positive, got " + n.get_str());
  PrimeFactorization out;
  if (fits_u64(n)) {
    for (auto [p, e] : factorize(to_u64(n))) out.factors.push_back({from_u64(p), e});
    return out;
  }
  Integer rest = n;
  for (std::uint32_t p : small_primes()) {
    if (rest == 1 || (fits_u64(rest) && u64{p} * p > to_u64(rest))) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.factors.push_back({Integer(p), e});
  }
  std::vector<Integer> large;
  split_big(rest, large);
  std::sort(large.begin(), large.end());
  for (Integer& p : large) {
    if (!out.factors.empty() && out.factors.back().prime == p) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({std::move(p), 1});
    }
  }
  return out;
}

Integer PrimeFactorization::value() const {
  Integer v = 1;
  for (const auto& f : factors) v *= pow(f.prime, f.exponent);
  return v;
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
  if (sgn(a) == 0 && sgn(b) == 0) throw DomainError("extended_gcd(0, 0) is undefined");
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  Integer q, tmp;
  while (sgn(r) != 0) {
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (sgn(old_r) < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::uint64_t sqrt_minus_one_mod_p(std::uint64_t p) {
  if (p % 4 != 1 || !is_prime(p)) {
    throw DomainError("x^2 = -1 (mod " + std::to_string(p) + ") needs a prime p = 1 (mod 4)");
  }
  const Montgomery mt(p);
  const u64 minus_one = mt.to(p - 1);
  for (u64 c = 2;; ++c) {
    const u64 cm = mt.to(c);
    if (mt.pow(cm, (p - 1) / 2) != minus_one) continue;
    const u64 x = mt.from(mt.pow(cm, (p - 1) / 4));
    return std::min(x, p - x);
  }
}

Integer sqrt_minus_one_mod_p(const Integer& p) {
  if (fits_u64(p)) {
    if (sgn(p) <= 0) throw DomainError("x^2 = -1 (mod p) needs a prime p = 1 (mod 4)");
    return from_u64(sqrt_minus_one_mod_p(to_u64(p)));
  }
  if (mpz_fdiv_ui(p.get_mpz_t(), 4) != 1 || !is_prime(p)) {
    throw DomainError("x^2 = -1 (mod " + p.get_str() + ") needs a prime p = 1 (mod 4)");
  }
  const Integer minus_one = p - 1;
  const Integer half = (p - 1) / 2;
  const Integer quarter = (p - 1) / 4;
  Integer t;
  for (unsigned long c = 2;; ++c) {
    Integer base(c);
    mpz_powm(t.get_mpz_t(), base.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
    if (t != minus_one) continue;
    mpz_powm(t.get_mpz_t(), base.get_mpz_t(), quarter.get_mpz_t(), p.get_mpz_t());
    Integer other = p - t;
    return t < other ? t : other;
  }
}

}  // namespace stk::arith
