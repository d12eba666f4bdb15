#include <algorithm>

#include "stk/arith.hpp"
#include "stk/error.hpp"

namespace stk::arith {

namespace {

unsigned strip(GaussianInt& z, const GaussianInt& prime) {
  unsigned e = 0;
  while (prime.divides(z)) {
    z = prime.exact_quotient_of(z);
    ++e;
  }
  return e;
}

}  // namespace

GaussianFactorization gaussian_factorize(const GaussianInt& z) {
  if (z.is_zero()) throw DomainError("gaussian_factorize: z must be nonzero");
  GaussianFactorization out;
  GaussianInt rest = z;
  for (const PrimePower& pp : factorize(z.norm()).factors) {
    const Integer& p = pp.prime;
    if (p == 2) {
      const GaussianInt one_plus_i(1, 1);
      out.factors.emplace_back(one_plus_i, strip(rest, one_plus_i));
    } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
      // Inert: p itself is a Gaussian prime and p^e | N(z) forces e even.
      const GaussianInt q(p, 0);
      out.factors.emplace_back(q, strip(rest, q));
    } else {
      const Integer x = sqrt_minus_one_mod_p(p);
      const GaussianInt pi = to_first_quadrant(gcd(GaussianInt(p, 0), GaussianInt(x, 1))).value;
      const GaussianInt pi_bar = to_first_quadrant(pi.conj()).value;
      for (const GaussianInt& g : {pi, pi_bar}) {
        if (unsigned e = strip(rest, g); e > 0) out.factors.emplace_back(g, e);
      }
    }
  }
  if (!rest.is_unit()) throw std::logic_error("gaussian_factorize: residual " + rest.to_string());
  out.unit = rest;
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    const Integer na = a.first.norm(), nb = b.first.norm();
    if (na != nb) return na < nb;
    return a.first.re < b.first.re;
  });
  return out;
}

GaussianInt GaussianFactorization::value() const {
  GaussianInt v = unit;
  for (const auto& [g, e] : factors) v *= pow(g, e);
  return v;
}

}  // namespace stk::arith
