#include "stk/pi.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stk/error.hpp"
#include "stk/parallel.hpp"

namespace stk::pi {

namespace {

using gregory::ArcTerm;
using gregory::GregoryCombo;

Integer pow10(long e) { return pow(Integer(10), static_cast<unsigned long>(e)); }

// Natural log of n > 0 without overflowing a double.
double ln_of(const Integer& n) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
}

long ceil_log10(double x) { return x <= 1 ? 0 : static_cast<long>(std::ceil(std::log10(x))); }

const ArcTerm& t1() {
  static const ArcTerm term{Integer(1)};
  return term;
}

// Terms needed before b^(2K+1)/a^(2K+1) drops below 10^-exponent.
std::uint64_t estimate_terms(const ArcTerm& term, long exponent, std::optional<std::uint64_t> cap) {
  const Integer& a = term.z().re;
  const Integer& b = term.z().im;
  if (a == b) return cap.value_or(0);
  const double per_term = 2.0 * (ln_of(a) - ln_of(b));
  const double k = std::ceil(static_cast<double>(exponent) * std::numbers::ln10 / per_term) + 1;
  const auto est = static_cast<std::uint64_t>(std::min(k, 1e18));
  return cap ? std::min(est, *cap) : est;
}

struct RawSeries {
  Integer sum;
  std::uint64_t terms = 0;
  bool capped = false;
};

// floor-ish arctan(b/a)·10^exponent; each division errs by under one unit.
RawSeries sum_series(const Integer& a, const Integer& b, long exponent,
                     std::optional<std::uint64_t> max_terms) {
  RawSeries out;
  Integer power = pow10(exponent) * b;
  mpz_fdiv_q(power.get_mpz_t(), power.get_mpz_t(), a.get_mpz_t());
  const Integer a2 = a * a;
  const Integer b2 = b * b;
  const bool small = a2.fits_ulong_p() && b2.fits_ulong_p();
  const unsigned long a2u = small ? a2.get_ui() : 0;
  const unsigned long b2u = small ? b2.get_ui() : 0;
  Integer term;
  std::uint64_t k = 0;
  for (;; ++k) {
    if (sgn(power) == 0) break;
    if (max_terms && k == *max_terms) {
      out.capped = true;
      break;
    }
    mpz_tdiv_q_ui(term.get_mpz_t(), power.get_mpz_t(), 2 * k + 1);
    if (k % 2 == 0) {
      out.sum += term;
    } else {
      out.sum -= term;
    }
    if (small) {
      mpz_mul_ui(power.get_mpz_t(), power.get_mpz_t(), b2u);
      mpz_tdiv_q_ui(power.get_mpz_t(), power.get_mpz_t(), a2u);
    } else {
      power *= b2;
      mpz_tdiv_q(power.get_mpz_t(), power.get_mpz_t(), a2.get_mpz_t());
    }
  }
  out.terms = k;
  return out;
}

Rational omitted_term(const Integer& a, const Integer& b, std::uint64_t k) {
  const unsigned long e = 2 * k + 1;
  return Rational(pow(b, e), Integer(from_u64(e) * pow(a, e)));
}

void check_series_term(const ArcTerm& term, bool capped) {
  const GaussianInt& z = term.z();
  if (z.re > z.im) return;
  if (z.re == 1 && z.im == 1) {
    if (!capped) throw DomainError("the t1 series converges too slowly; give max_terms");
    return;
  }
  throw DomainError("series for " + term.to_string() + " needs an argument below 1");
}

}  // namespace

// --- FixedPoint ------------------------------------------------------------

std::string FixedPoint::to_string() const {
  Integer whole = abs(mantissa);
  mpz_tdiv_q(whole.get_mpz_t(), whole.get_mpz_t(), pow10(guard).get_mpz_t());
  std::string digits = whole.get_str();
  if (static_cast<long>(digits.size()) <= scale) {
    digits.insert(0, static_cast<std::size_t>(scale + 1) - digits.size(), '0');
  }
  std::string out = sgn(mantissa) < 0 ? "-" : "";
  const std::size_t split = digits.size() - static_cast<std::size_t>(scale);
  out += digits.substr(0, split);
  if (scale > 0) out += "." + digits.substr(split);
  return out;
}

Rational FixedPoint::to_rational() const { return Rational(mantissa, pow10(scale + guard)); }

// --- series ----------------------------------------------------------------

SeriesResult gregory_series(const ArcTerm& term, long precision_digits,
                            std::optional<std::uint64_t> max_terms) {
  if (precision_digits < 0) throw DomainError("precision must be non-negative");
  check_series_term(term, max_terms.has_value());
  const Integer& a = term.z().re;
  const Integer& b = term.z().im;
  const std::uint64_t est = estimate_terms(term, precision_digits + 10, max_terms);
  const long guard = 10 + ceil_log10(static_cast<double>(est) + 1);
  RawSeries raw = sum_series(a, b, precision_digits + guard, max_terms);
  SeriesResult out;
  out.value = FixedPoint{std::move(raw.sum), precision_digits, guard};
  out.terms_used = raw.terms;
  out.capped = raw.capped;
  out.first_omitted = omitted_term(a, b, raw.terms);
  return out;
}

// --- formulas --------------------------------------------------------------

gregory::Identity PiFormula::identity() const {
  return {GregoryCombo{{t1(), multiple}}, rhs};
}

namespace {

void verify_formula(const PiFormula& f) {
  if (sgn(f.multiple) <= 0) throw DomainError("the multiple of t1 must be positive");
  if (f.rhs.empty()) throw DomainError("formula has no right-hand side");
  if (sgn(f.rhs.coefficient(t1())) != 0) throw DomainError("t1 may not appear on the right-hand side");
  if (!gregory::verify_identity(f.identity())) {
    throw DomainError("formula fails verification: " + f.to_string());
  }
}

}  // namespace

PiFormula make_formula(const gregory::Identity& identity) {
  GregoryCombo diff = identity.lhs - identity.rhs;
  const Integer c1 = diff.coefficient(t1());
  if (sgn(c1) == 0) throw DomainError("formula has no t1 term: " + identity.to_string());
  diff.add(t1(), Integer(-c1));
  // c1·t1 + diff = 0
  PiFormula f;
  if (sgn(c1) > 0) {
    f.multiple = c1;
    f.rhs = -diff;
  } else {
    f.multiple = -c1;
    f.rhs = diff;
  }
  verify_formula(f);
  return f;
}

PiFormula make_formula(const GregoryCombo& rhs) {
  const long double ratio = rhs.evaluate() / (std::numbers::pi_v<long double> / 4);
  PiFormula f{Integer(static_cast<long>(std::llround(ratio))), rhs};
  verify_formula(f);
  return f;
}

namespace {

struct Named {
  std::string_view name;
  std::string_view identity;
};

constexpr std::array<Named, 4> kNamed{{
    {"machin", "t1 = 4*t5 - t239"},
    {"vega", "t1 = 2*t3 + t7"},
    {"euler", "t1 = 5*t7 + 2*t79/3"},
    {"stormer1896", "t1 = 44*t57 + 7*t239 - 12*t682 + 24*t12943"},
}};

constexpr std::array<std::string_view, 4> kNames{"machin", "vega", "euler", "stormer1896"};

}  // namespace

std::span<const std::string_view> formula_names() { return kNames; }

PiFormula resolve_formula(std::string_view text) {
  for (const auto& n : kNamed) {
    if (n.name == text) return make_formula(gregory::parse_identity(n.identity));
  }
  if (text.find('=') == std::string_view::npos) {
    throw ParseError("unknown formula '" + std::string(text) +
                     "' (expected machin, vega, euler, stormer1896 or an identity)");
  }
  return make_formula(gregory::parse_identity(text));
}

// --- π ---------------------------------------------------------------------

PiResult compute_pi(const PiFormula& formula, long digits, const PiOptions& options) {
  if (digits <= 0) throw DomainError("digits must be positive");
  verify_formula(formula);

  std::vector<std::pair<ArcTerm, Integer>> terms(formula.rhs.terms().begin(), formula.rhs.terms().end());
  for (const auto& [term, coef] : terms) check_series_term(term, options.max_terms.has_value());

  const long places = digits - 1;
  Integer weight = 0;
  for (const auto& [term, coef] : terms) weight += abs(coef);
  weight *= 4;
  const long precision = places + static_cast<long>(decimal_digits(weight)) + 1;
  std::uint64_t most_terms = 1;
  for (const auto& [term, coef] : terms) {
    most_terms = std::max(most_terms, estimate_terms(term, precision + 10, options.max_terms));
  }
  const long guard = 10 + ceil_log10(static_cast<double>(most_terms) + 1) +
                     static_cast<long>(decimal_digits(from_u64(terms.size())));
  const long exponent = precision + guard;

  std::vector<RawSeries> sums(terms.size());
  std::atomic<std::size_t> done{0};
  parallel_chunks(0, terms.size(), 1, std::max(1U, options.workers),
                  [&](std::uint64_t lo, std::uint64_t, std::uint64_t) {
                    const ArcTerm& t = terms[lo].first;
                    sums[lo] = sum_series(t.z().re, t.z().im, exponent, options.max_terms);
                    const std::size_t finished = ++done;
                    if (options.progress) options.progress(finished, terms.size());
                  });

  Integer total = 0;
  PiResult out;
  out.formula = formula;
  out.requested_digits = digits;
  Rational tail;
  std::uint64_t all_terms = 0;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const auto& [term, coef] = terms[j];
    total += coef * sums[j].sum;
    out.terms_used.push_back(sums[j].terms);
    out.capped = out.capped || sums[j].capped;
    all_terms += sums[j].terms;
    tail = tail + Rational(abs(coef)) * omitted_term(term.z().re, term.z().im, sums[j].terms);
  }
  total *= 4;
  const Rational value(total, formula.multiple * pow10(exponent));
  mpz_fdiv_q(total.get_mpz_t(), total.get_mpz_t(), formula.multiple.get_mpz_t());
  mpz_fdiv_q(total.get_mpz_t(), total.get_mpz_t(), pow10(exponent - places).get_mpz_t());

  const std::string raw = total.get_str();
  if (static_cast<long>(raw.size()) != places + 1 || raw[0] != '3') {
    throw std::logic_error("compute_pi: evaluation left the interval [3, 4)");
  }
  out.digits = places > 0 ? raw.substr(0, 1) + "." + raw.substr(1) : raw;

  // Tail bound plus at most three units of 10^-exponent per division.
  const Rational rounding(weight * from_u64(3 * (all_terms + 2 * terms.size())), pow10(exponent));
  const Rational bound = (Rational(4) * tail + rounding) / Rational(formula.multiple);
  // π lies in [value - bound, value + bound]; digits shared by both ends are certain.
  if (bound < value) {
    const std::string low = decimal_expansion(value - bound, places);
    const std::string high = decimal_expansion(value + bound, places);
    const auto differ = std::mismatch(low.begin(), low.end(), high.begin(), high.end()).first;
    out.correct_digits = std::count_if(low.begin(), differ, [](char c) { return c != '.'; });
  }
  return out;
}

// --- digit strings ---------------------------------------------------------

namespace {

void check_decimal(std::string_view s) {
  const auto dot = s.find('.');
  const bool ok = !s.empty() && dot != 0 && dot != std::string_view::npos && dot + 1 < s.size() &&
                  std::all_of(s.begin(), s.end(), [&](char c) {
                    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
                  }) &&
                  s.find('.', dot + 1) == std::string_view::npos;
  if (!ok) throw ParseError("malformed decimal expansion '" + std::string(s) + "'");
}

}  // namespace

std::size_t compare_digits(std::string_view a, std::string_view b) {
  check_decimal(a);
  check_decimal(b);
  if (a.find('.') != b.find('.')) return 0;
  std::size_t agree = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) break;
    if (a[i] != '.') ++agree;
  }
  return agree;
}

std::string decimal_expansion(const Rational& q, long places) {
  if (sgn(q.num()) < 0) throw DomainError("decimal_expansion needs q >= 0");
  Integer scaled = q.num() * pow10(places);
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q.den().get_mpz_t());
  return FixedPoint{scaled, places, 0}.to_string();
}

Rational parse_decimal(std::string_view text) {
  check_decimal(text);
  std::string digits(text);
  const auto dot = digits.find('.');
  const long places = static_cast<long>(digits.size() - dot - 1);
  digits.erase(dot, 1);
  return Rational(Integer(digits), pow10(places));
}

bool classical_bounds_check(std::string_view pi_digits) {
  const Rational p = parse_decimal(pi_digits);
  const Rational lower(Integer(223), Integer(71));
  const Rational upper(Integer(22), Integer(7));
  const Rational zu(Integer(355), Integer(113));
  const Rational tolerance(Integer(9), pow10(8));
  return lower < p && p < upper && (p - zu).abs() < tolerance * p;
}

bool classical_bounds_check() {
  return classical_bounds_check(compute_pi(resolve_formula("machin"), 30).digits);
}

}  // namespace stk::pi
