#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stk/gaussian.hpp"
#include "stk/integer.hpp"

namespace stk::gregory {

/// arg(a + bi) for coprime a, b >= 1. With b = 1 this is the Gregory
/// number t_a = arctan(1/a); otherwise it is t_{a/b} = arctan(b/a).
class ArcTerm {
 public:
  /// t_n, n >= 1.
  explicit ArcTerm(const Integer& n);
  /// t_{a/b}; the content gcd(a, b) is divided out.
  ArcTerm(const Integer& a, const Integer& b);

  const GaussianInt& z() const { return z_; }
  bool is_index() const { return z_.im == 1; }
  /// n for t_n. Throws DomainError for a rational term.
  const Integer& index() const;

  long double value() const;
  /// "t5", "t79/3".
  std::string to_string() const;

  /// Ascending in x = re/im, so t1 < t2 < t79/3 < t239.
  friend std::strong_ordering operator<=>(const ArcTerm& a, const ArcTerm& b);
  friend bool operator==(const ArcTerm& a, const ArcTerm& b) { return a.z_ == b.z_; }

 private:
  GaussianInt z_;
};

/// Σ c_z · arg(z) with nonzero integer coefficients.
class GregoryCombo {
 public:
  using Map = std::map<ArcTerm, Integer>;

  GregoryCombo() = default;
  GregoryCombo(std::initializer_list<std::pair<ArcTerm, Integer>> terms);

  /// Adds coef · arg(z) for z with re > 0. A conjugate is stored with the
  /// opposite sign and positive scalars are dropped; a real z contributes 0.
  void add(const GaussianInt& z, const Integer& coef);
  void add(const ArcTerm& term, const Integer& coef);

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const ArcTerm& term) const;

  GregoryCombo& operator+=(const GregoryCombo& o);
  GregoryCombo& operator-=(const GregoryCombo& o);
  GregoryCombo& operator*=(const Integer& k);
  GregoryCombo operator-() const;
  friend GregoryCombo operator+(GregoryCombo a, const GregoryCombo& b) { return a += b; }
  friend GregoryCombo operator-(GregoryCombo a, const GregoryCombo& b) { return a -= b; }
  friend GregoryCombo operator*(GregoryCombo a, const Integer& k) { return a *= k; }
  friend bool operator==(const GregoryCombo& a, const GregoryCombo& b) = default;

  long double evaluate() const;
  /// "-t2 + 2*t5 + t12"; the empty combo prints as "0".
  std::string to_string() const;

 private:
  Map terms_;
};

struct Identity {
  GregoryCombo lhs;
  GregoryCombo rhs;

  /// "t1 = 4*t5 - t239".
  std::string to_string() const;
};

/// Terms are `c*tN` or `c*tA/B` with inline signs around a single '='.
/// Throws ParseError.
Identity parse_identity(std::string_view text);
GregoryCombo parse_combo(std::string_view text);

struct VerifyResult {
  bool holds = false;
  /// Π z^c over lhs - rhs (conjugates for negative c) is a positive real.
  bool exact = false;
  /// |Σ lhs - Σ rhs| < 1e-9 in extended precision.
  bool numeric = false;
  GaussianInt certificate;
  long double residual = 0;

  explicit operator bool() const { return holds; }
};

VerifyResult verify_identity(const GregoryCombo& lhs, const GregoryCombo& rhs);
VerifyResult verify_identity(const Identity& identity);

// --- flattening -----------------------------------------------------------

/// How to pick (c, d) among the solutions of a·d + b·c = ±1.
///  PreferUnitImaginary: a solution with d = ±1 when one exists (rhs = +1,
///    then c > 0, then smaller norm); otherwise MinimalNorm.
///  MinimalNorm: smallest c² + d², then d = ±1, smaller |d|, c > 0, rhs = +1.
enum class FlattenRule { PreferUnitImaginary, MinimalNorm };

std::string_view to_string(FlattenRule rule);
FlattenRule parse_flatten_rule(std::string_view text);

/// input · multiplier = e + rhs·i.
struct FlattenStep {
  GaussianInt input;
  GaussianInt multiplier;
  GaussianInt product;
  int rhs = 1;
};

/// One Diophantine step. Throws DomainError when gcd(re, im) != 1 or z is a
/// unit multiple of 1 or 1+i.
FlattenStep flatten_step(const GaussianInt& z, FlattenRule rule);

/// z · m_1 = w, and each multiplier that is not yet of the form x ± i (up to
/// a unit) is flattened in turn: m_k · m_{k+1} = e_k ± i.
struct FlattenResult {
  GaussianInt w;
  std::vector<GaussianInt> multipliers;
  std::vector<FlattenStep> steps;
};

/// Requires re > 0, gcd(re, im) = 1, |im| != 1, norm > 2. Norms of the
/// successive inputs must strictly decrease; a violation throws logic_error.
FlattenResult flatten(const GaussianInt& z, FlattenRule rule = FlattenRule::PreferUnitImaginary);

// --- decomposition --------------------------------------------------------

/// Expresses t_n over Størmer-number Gregory numbers t_s, s < n.
/// Results are cached; safe for concurrent callers.
class Decomposer {
 public:
  GregoryCombo decompose(const Integer& n);

  /// Σ c·t_s with arg(z) ≡ Σ c·t_s (mod 2π) for z != 0.
  GregoryCombo arg_mod_2pi(const GaussianInt& z);

 private:
  GregoryCombo prime_arg(const GaussianInt& prime);
  GregoryCombo index_arg(const Integer& s);

  std::shared_mutex mutex_;
  std::map<Integer, GregoryCombo> by_index_;
  std::map<std::pair<Integer, Integer>, GregoryCombo> by_prime_;
};

/// Shared process-wide Decomposer. Throws DomainError for n <= 0.
GregoryCombo decompose(const Integer& n);

/// arccot(a/b) = arccot(n_0) - arccot(n_1) + arccot(n_2) - ...
struct LehmerExpansion {
  Integer a;
  Integer b;
  std::vector<Integer> cotangents;
  /// False when max_terms ran out before the remainder reached 0.
  bool complete = false;

  long double evaluate() const;
};

/// Requires a > b >= 1 and gcd(a, b) = 1.
LehmerExpansion lehmer_expand(const Integer& a, const Integer& b, std::size_t max_terms = 64);

/// decompose(n) is the trivial combo {t_n: 1}.
bool is_irreducible(const Integer& n);

/// Every prime factor of 1 + n² divides 1 + m² for some 1 <= m < n.
/// Requires n >= 2.
bool occurs_among_earlier(const Integer& n);

}  // namespace stk::gregory
