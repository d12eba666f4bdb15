#include "stk/gregory.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "stk/arith.hpp"
#include "stk/error.hpp"
#include "stk/stormer.hpp"

namespace stk::gregory {

namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

// Top 64 bits of |n| scaled back up, so huge values keep their ratio.
long double to_long_double(const Integer& n) {
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (bits <= 64) {
    const Integer m = abs(n);
    const long double v = static_cast<long double>(to_u64(m));
    return sgn(n) < 0 ? -v : v;
  }
  Integer top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), n.get_mpz_t(), bits - 64);
  const long double v = std::ldexp(static_cast<long double>(to_u64(abs(top))), static_cast<int>(bits - 64));
  return sgn(n) < 0 ? -v : v;
}

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

const ArcTerm& t1() {
  static const ArcTerm term{Integer(1)};
  return term;
}

GregoryCombo quarter_turns(long k) {
  GregoryCombo c;
  c.add(t1(), Integer(2 * k));
  return c;
}

}  // namespace

// --- ArcTerm ---------------------------------------------------------------

ArcTerm::ArcTerm(const Integer& n) : z_(n, Integer(1)) {
  if (sgn(n) <= 0) throw DomainError("Gregory number index must be positive, got " + n.get_str());
}

ArcTerm::ArcTerm(const Integer& a, const Integer& b) {
  if (sgn(a) <= 0 || sgn(b) <= 0) {
    throw DomainError("arc term t" + a.get_str() + "/" + b.get_str() + " needs positive parts");
  }
  const Integer g = gcd_of(a, b);
  z_ = GaussianInt(a / g, b / g);
}

const Integer& ArcTerm::index() const {
  if (!is_index()) throw DomainError(to_string() + " is not an integer-index term");
  return z_.re;
}

long double ArcTerm::value() const {
  return std::atan2(to_long_double(z_.im), to_long_double(z_.re));
}

std::string ArcTerm::to_string() const {
  if (is_index()) return "t" + z_.re.get_str();
  return "t" + z_.re.get_str() + "/" + z_.im.get_str();
}

std::strong_ordering operator<=>(const ArcTerm& a, const ArcTerm& b) {
  const int c = cmp(a.z_.re * b.z_.im, b.z_.re * a.z_.im);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// --- GregoryCombo ----------------------------------------------------------

GregoryCombo::GregoryCombo(std::initializer_list<std::pair<ArcTerm, Integer>> terms) {
  for (const auto& [term, coef] : terms) add(term, coef);
}

void GregoryCombo::add(const ArcTerm& term, const Integer& coef) {
  if (sgn(coef) == 0) return;
  auto [it, inserted] = terms_.try_emplace(term, coef);
  if (!inserted) {
    it->second += coef;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void GregoryCombo::add(const GaussianInt& z, const Integer& coef) {
  if (sgn(z.re) <= 0) {
    throw DomainError("arg(" + z.to_string() + ") lies outside the right half-plane");
  }
  if (sgn(z.im) == 0) return;
  if (sgn(z.im) < 0) {
    add(ArcTerm(z.re, -z.im), -coef);
  } else {
    add(ArcTerm(z.re, z.im), coef);
  }
}

Integer GregoryCombo::coefficient(const ArcTerm& term) const {
  auto it = terms_.find(term);
  return it == terms_.end() ? Integer(0) : it->second;
}

GregoryCombo& GregoryCombo::operator+=(const GregoryCombo& o) {
  for (const auto& [term, coef] : o.terms_) add(term, coef);
  return *this;
}

GregoryCombo& GregoryCombo::operator-=(const GregoryCombo& o) {
  for (const auto& [term, coef] : o.terms_) add(term, Integer(-coef));
  return *this;
}

GregoryCombo& GregoryCombo::operator*=(const Integer& k) {
  if (sgn(k) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& entry : terms_) entry.second *= k;
  return *this;
}

GregoryCombo GregoryCombo::operator-() const {
  GregoryCombo out = *this;
  return out *= Integer(-1);
}

long double GregoryCombo::evaluate() const {
  long double sum = 0;
  for (const auto& [term, coef] : terms_) sum += to_long_double(coef) * term.value();
  return sum;
}

std::string GregoryCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [term, coef] : terms_) {
    const bool negative = sgn(coef) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Integer mag = abs(coef);
    if (mag != 1) out += mag.get_str() + "*";
    out += term.to_string();
  }
  return out;
}

std::string Identity::to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }

// --- parsing ---------------------------------------------------------------

namespace {

class ComboParser {
 public:
  explicit ComboParser(std::string_view text) : text_(text) {}

  GregoryCombo side() {
    GregoryCombo out;
    skip();
    if (peek() == '0' && !followed_by_term()) {
      ++pos_;
      return out;
    }
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      skip();
      Integer coef = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = number();
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
        }
      }
      if (peek() != 't') fail("expected a term such as t5 or 2*t79/3");
      ++pos_;
      skip();
      Integer a = number();
      skip();
      Integer b = 1;
      if (peek() == '/') {
        ++pos_;
        skip();
        b = number();
      }
      if (sgn(a) == 0 || sgn(b) == 0) fail("term subscripts must be positive");
      out.add(ArcTerm(a, b), Integer(sign * coef));
      first = false;
    }
    return out;
  }

  bool at(char c) {
    skip();
    return peek() == c;
  }
  void expect(char c) {
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void finish() {
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool followed_by_term() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && (text_[p] == '*' || text_[p] == 't' ||
                                std::isdigit(static_cast<unsigned char>(text_[p])));
  }
  Integer number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at position " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Identity parse_identity(std::string_view text) {
  ComboParser p(text);
  Identity id;
  id.lhs = p.side();
  p.expect('=');
  id.rhs = p.side();
  p.finish();
  return id;
}

GregoryCombo parse_combo(std::string_view text) {
  ComboParser p(text);
  GregoryCombo c = p.side();
  p.finish();
  return c;
}

// --- verification ----------------------------------------------------------

VerifyResult verify_identity(const GregoryCombo& lhs, const GregoryCombo& rhs) {
  const GregoryCombo diff = lhs - rhs;
  VerifyResult r;

  // Rough size of the certificate in bits; refuse absurd exponents.
  double bits = 0;
  for (const auto& [term, coef] : diff.terms()) {
    bits += std::abs(to_long_double(coef)) *
            static_cast<double>(mpz_sizeinbase(term.z().norm().get_mpz_t(), 2));
  }
  if (bits > 1e8) throw DomainError("coefficients too large for exact verification");

  GaussianInt product(1, 0);
  for (const auto& [term, coef] : diff.terms()) {
    const GaussianInt base = sgn(coef) > 0 ? term.z() : term.z().conj();
    product *= pow(base, Integer(abs(coef)).get_ui());
  }
  r.exact = sgn(product.im) == 0 && sgn(product.re) > 0;
  r.residual = diff.evaluate();
  r.numeric = std::abs(r.residual) < 1e-9L;
  r.holds = r.exact && r.numeric;
  r.certificate = std::move(product);
  return r;
}

VerifyResult verify_identity(const Identity& identity) {
  return verify_identity(identity.lhs, identity.rhs);
}

// --- flattening ------------------------------------------------------------

std::string_view to_string(FlattenRule rule) {
  return rule == FlattenRule::MinimalNorm ? "minimal-norm" : "prefer-unit-imaginary";
}

FlattenRule parse_flatten_rule(std::string_view text) {
  if (text == "minimal-norm") return FlattenRule::MinimalNorm;
  if (text == "prefer-unit-imaginary") return FlattenRule::PreferUnitImaginary;
  throw ParseError("unknown flatten rule '" + std::string(text) +
                   "' (expected minimal-norm or prefer-unit-imaginary)");
}

namespace {

struct Candidate {
  Integer c;
  Integer d;
  int rhs;
  Integer norm;
};

std::vector<Candidate> flatten_candidates(const Integer& a, const Integer& b) {
  const arith::Bezout bz = arith::extended_gcd(a, b);
  if (bz.g != 1) throw DomainError("flatten needs coprime parts");
  std::vector<Candidate> out;
  const Integer n = a * a + b * b;
  auto push = [&](const Integer& c0, const Integer& d0, const Integer& k, int rhs) {
    Candidate cand{c0 + a * k, d0 - b * k, rhs, 0};
    cand.norm = cand.c * cand.c + cand.d * cand.d;
    if (cand.norm < 2) return;
    for (const auto& o : out) {
      if (o.c == cand.c && o.d == cand.d) return;
    }
    out.push_back(std::move(cand));
  };
  for (int rhs : {1, -1}) {
    // a·d + b·c = rhs along (c, d) = (c0 + a·k, d0 - b·k).
    const Integer d0 = bz.u * rhs;
    const Integer c0 = bz.v * rhs;
    Integer k0;
    const Integer num = b * d0 - a * c0;
    mpz_fdiv_q(k0.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    for (int dk = -1; dk <= 2; ++dk) push(c0, d0, k0 + dk, rhs);
    if (sgn(b) != 0) {
      for (int t : {1, -1}) {
        const Integer delta = d0 - t;
        if (mpz_divisible_p(delta.get_mpz_t(), b.get_mpz_t())) push(c0, d0, Integer(delta / b), rhs);
      }
    }
  }
  return out;
}

auto minimal_norm_key(const Candidate& c) {
  const Integer ad = abs(c.d);
  return std::make_tuple(c.norm, ad == 1 ? 0 : 1, ad, sgn(c.c) > 0 ? 0 : 1, c.rhs == 1 ? 0 : 1);
}

bool is_near_linear(const GaussianInt& z) {
  return abs(z.re) == 1 || abs(z.im) == 1;
}

}  // namespace

FlattenStep flatten_step(const GaussianInt& z, FlattenRule rule) {
  if (z.norm() <= 2) throw DomainError("cannot flatten " + z.to_string() + ": norm must exceed 2");
  std::vector<Candidate> cands = flatten_candidates(z.re, z.im);
  const Candidate* best = nullptr;
  if (rule == FlattenRule::PreferUnitImaginary) {
    for (const auto& c : cands) {
      if (abs(c.d) != 1) continue;
      auto key = [](const Candidate& x) {
        return std::make_tuple(x.rhs == 1 ? 0 : 1, sgn(x.c) > 0 ? 0 : 1, x.norm);
      };
      if (best == nullptr || key(c) < key(*best)) best = &c;
    }
  }
  if (best == nullptr) {
    for (const auto& c : cands) {
      if (best == nullptr || minimal_norm_key(c) < minimal_norm_key(*best)) best = &c;
    }
  }
  if (best == nullptr) throw std::logic_error("flatten: no admissible multiplier");
  FlattenStep step;
  step.input = z;
  step.multiplier = GaussianInt(best->c, best->d);
  step.product = z * step.multiplier;
  step.rhs = best->rhs;
  if (step.product.im != best->rhs) throw std::logic_error("flatten: Diophantine solution is wrong");
  return step;
}

FlattenResult flatten(const GaussianInt& z, FlattenRule rule) {
  if (sgn(z.re) <= 0) throw DomainError("flatten needs re > 0, got " + z.to_string());
  if (abs(z.im) == 1) throw DomainError(z.to_string() + " is already of the form x ± i");
  if (gcd_of(z.re, z.im) != 1) throw DomainError("flatten needs gcd(re, im) = 1, got " + z.to_string());
  FlattenResult out;
  FlattenStep step = flatten_step(z, rule);
  out.w = step.product;
  while (true) {
    if (step.multiplier.norm() >= step.input.norm()) {
      throw std::logic_error("flatten: norm did not decrease at " + step.input.to_string());
    }
    out.multipliers.push_back(step.multiplier);
    out.steps.push_back(step);
    if (is_near_linear(step.multiplier)) break;
    step = flatten_step(step.multiplier, rule);
  }
  return out;
}

// --- decomposition ---------------------------------------------------------

GregoryCombo Decomposer::index_arg(const Integer& s) {
  if (stormer::is_stormer(s, stormer::Convention::Inclusive).is_stormer) {
    return GregoryCombo{{ArcTerm(s), Integer(1)}};
  }
  return decompose(s);
}

GregoryCombo Decomposer::prime_arg(const GaussianInt& prime) {
  if (prime.norm() == 2) return GregoryCombo{{t1(), Integer(1)}};
  if (sgn(prime.im) == 0) return {};
  if (prime.im == 1) return index_arg(prime.re);
  if (prime.re == 1) return quarter_turns(1) - index_arg(prime.im);  // 1+bi = i(b-i)

  const std::pair<Integer, Integer> key{prime.re, prime.im};
  {
    std::shared_lock lock(mutex_);
    if (auto it = by_prime_.find(key); it != by_prime_.end()) return it->second;
  }
  // prime · m = e ± i with |e| = S(norm), a Størmer number.
  const FlattenStep step = flatten_step(prime, FlattenRule::MinimalNorm);
  const Integer& e = step.product.re;
  GregoryCombo out = index_arg(abs(e)) * Integer(sgn(e) > 0 ? step.rhs : -step.rhs);
  if (sgn(e) < 0) out += quarter_turns(2);
  out -= arg_mod_2pi(step.multiplier);

  std::unique_lock lock(mutex_);
  by_prime_.emplace(key, out);
  return out;
}

GregoryCombo Decomposer::arg_mod_2pi(const GaussianInt& z) {
  const arith::GaussianFactorization f = arith::gaussian_factorize(z);
  GregoryCombo out;
  const GaussianInt& u = f.unit;
  if (u == GaussianInt(0, 1)) out = quarter_turns(1);
  else if (u == GaussianInt(-1, 0)) out = quarter_turns(2);
  else if (u == GaussianInt(0, -1)) out = quarter_turns(-1);
  for (const auto& [prime, e] : f.factors) out += prime_arg(prime) * Integer(e);
  return out;
}

GregoryCombo Decomposer::decompose(const Integer& n) {
  if (sgn(n) <= 0) throw DomainError("decompose: n must be positive, got " + n.get_str());
  const ArcTerm target(n);
  if (stormer::is_stormer(n, stormer::Convention::Inclusive).is_stormer) {
    return GregoryCombo{{target, Integer(1)}};
  }
  {
    std::shared_lock lock(mutex_);
    if (auto it = by_index_.find(n); it != by_index_.end()) return it->second;
  }
  GregoryCombo out = arg_mod_2pi(GaussianInt(n, Integer(1)));
  // The Gaussian products fix the combination modulo 2π = 8·t1.
  const long double turns = (target.value() - out.evaluate()) / kTwoPi;
  out.add(t1(), Integer(8 * static_cast<long>(std::llround(turns))));

  if (!verify_identity(GregoryCombo{{target, Integer(1)}}, out)) {
    throw std::logic_error("decompose(" + n.get_str() + ") produced a false identity");
  }
  for (const auto& [term, coef] : out.terms()) {
    if (!term.is_index() || term.index() >= n) {
      throw std::logic_error("decompose(" + n.get_str() + ") left term " + term.to_string());
    }
  }
  std::unique_lock lock(mutex_);
  by_index_.emplace(n, out);
  return out;
}

GregoryCombo decompose(const Integer& n) {
  static Decomposer shared;
  return shared.decompose(n);
}

// --- Lehmer and Todd -------------------------------------------------------

long double LehmerExpansion::evaluate() const {
  long double sum = 0;
  for (std::size_t j = 0; j < cotangents.size(); ++j) {
    const long double term = std::atan(1.0L / to_long_double(cotangents[j]));
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

LehmerExpansion lehmer_expand(const Integer& a, const Integer& b, std::size_t max_terms) {
  if (sgn(b) <= 0 || a <= b) {
    throw DomainError("lehmer_expand needs a > b >= 1, got (" + a.get_str() + ", " + b.get_str() + ")");
  }
  if (gcd_of(a, b) != 1) throw DomainError("lehmer_expand needs gcd(a, b) = 1");
  LehmerExpansion out{a, b, {}, false};
  Integer aj = a;
  Integer bj = b;
  while (out.cotangents.size() < max_terms) {
    Integer n;
    Integer next_b;
    mpz_fdiv_qr(n.get_mpz_t(), next_b.get_mpz_t(), aj.get_mpz_t(), bj.get_mpz_t());
    out.cotangents.push_back(n);
    if (sgn(next_b) == 0) {
      out.complete = true;
      break;
    }
    aj = aj * n + bj;
    bj = std::move(next_b);
  }
  return out;
}

bool is_irreducible(const Integer& n) {
  return decompose(n) == GregoryCombo{{ArcTerm(n), Integer(1)}};
}

bool occurs_among_earlier(const Integer& n) {
  if (n < 2) throw DomainError("occurs_among_earlier needs n >= 2, got " + n.get_str());
  const arith::PrimeFactorization f = arith::factorize(n * n + 1);
  for (const auto& pp : f.factors) {
    if (pp.prime == 2) continue;  // 2 | 1 + 1²
    if (arith::sqrt_minus_one_mod_p(pp.prime) >= n) return false;
  }
  return true;
}

}  // namespace stk::gregory
