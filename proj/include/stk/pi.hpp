#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stk/gregory.hpp"
#include "stk/integer.hpp"
#include "stk/rational.hpp"

namespace stk::pi {

/// mantissa / 10^(scale + guard). The last `guard` digits absorb rounding
/// from integer division and are never printed.
struct FixedPoint {
  Integer mantissa;
  long scale = 0;
  long guard = 0;

  /// Truncates to `scale` digits after the point, e.g. "0.1973955598".
  std::string to_string() const;
  Rational to_rational() const;
};

struct SeriesResult {
  FixedPoint value;
  std::uint64_t terms_used = 0;
  /// True when max_terms stopped the sum before it reached working precision.
  bool capped = false;
  /// Exact magnitude of the first term left out: b^(2K+1) / ((2K+1)·a^(2K+1)).
  Rational first_omitted;
};

/// arctan(b/a) for the term arg(a + bi), by the alternating Gregory series.
/// Requires a > b, except t1 which is accepted only with max_terms.
SeriesResult gregory_series(const gregory::ArcTerm& term, long precision_digits,
                            std::optional<std::uint64_t> max_terms = std::nullopt);

/// multiple · t1 = rhs, with multiple >= 1 and no t1 on the right.
struct PiFormula {
  Integer multiple;
  gregory::GregoryCombo rhs;

  gregory::Identity identity() const;
  std::string to_string() const { return identity().to_string(); }
};

/// Rearranges an identity into PiFormula shape and verifies it.
/// Throws DomainError when it is false or has no t1 term.
PiFormula make_formula(const gregory::Identity& identity);
/// The multiple of t1 is inferred numerically, then verified exactly.
PiFormula make_formula(const gregory::GregoryCombo& rhs);

/// machin, vega, euler, stormer1896.
std::span<const std::string_view> formula_names();
/// A name from formula_names() or an identity such as "t1 = 4*t5 - t239".
PiFormula resolve_formula(std::string_view name_or_identity);

struct PiOptions {
  std::optional<std::uint64_t> max_terms;
  unsigned workers = 1;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

struct PiResult {
  PiFormula formula;
  /// Leading "3" included: digits = 11 gives "3.1415926535".
  std::string digits;
  std::vector<std::uint64_t> terms_used;
  long requested_digits = 0;
  bool capped = false;
  /// Leading digits shared by both ends of the interval value ± bound, where
  /// bound is the alternating-series tail plus the division error budget.
  long correct_digits = 0;
};

PiResult compute_pi(const PiFormula& formula, long digits, const PiOptions& options = {});

/// Leading characters, decimal point excluded, on which both agree.
/// Throws ParseError unless both look like "3.14159...".
std::size_t compare_digits(std::string_view a, std::string_view b);

/// Truncated decimal expansion of q >= 0 with `places` digits after the point.
std::string decimal_expansion(const Rational& q, long places);

/// Parses "3.14159..." exactly.
Rational parse_decimal(std::string_view text);

/// 223/71 < π < 22/7 and |π - 355/113| / π < 9·10⁻⁸, using π to 30 digits.
bool classical_bounds_check();
bool classical_bounds_check(std::string_view pi_digits);

}  // namespace stk::pi
