#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stk/arith.hpp"
#include "stk/density.hpp"
#include "stk/error.hpp"
#include "stk/gregory.hpp"
#include "stk/parallel.hpp"
#include "stk/pi.hpp"
#include "stk/serialize.hpp"
#include "stk/stormer.hpp"
#include "stk/twosquares.hpp"

namespace stk::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw ParseError("unknown format '" + s + "' (expected text, json or csv)");
}

std::string fmt(double v, int significant = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

std::uint64_t parse_positive(const std::string& text) {
  const Integer n = parse_integer(text);
  if (sgn(n) <= 0) throw ParseError("expected a positive integer, got '" + text + "'");
  if (!fits_u64(n)) throw ParseError("integer '" + text + "' is too large for this command");
  return to_u64(n);
}

std::vector<std::uint64_t> parse_limits(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("empty entry in limit list '" + text + "'");
    out.push_back(parse_positive(item));
    if (out.size() > 1 && out.back() <= out[out.size() - 2]) {
      throw ParseError("limits must be strictly ascending: '" + text + "'");
    }
  }
  if (out.empty()) throw ParseError("no limits given");
  return out;
}

// Reports at most every tenth of the way, on the error stream only.
class ProgressLine {
 public:
  ProgressLine(std::ostream& err, std::string label) : err_(err), label_(std::move(label)) {}

  void operator()(std::uint64_t done, std::uint64_t total) {
    if (total == 0) return;
    const int decile = static_cast<int>(10 * done / total);
    if (decile <= last_) return;
    last_ = decile;
    err_ << label_ << ": " << decile * 10 << "% (" << done << "/" << total << ")\n" << std::flush;
  }

 private:
  std::ostream& err_;
  std::string label_;
  int last_ = 0;
};

std::string join(const std::vector<Integer>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += v[i].get_str();
  }
  return out;
}

json integers_to_json(const std::vector<Integer>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(integer_to_json(x));
  return arr;
}

struct Context {
  Format format;
  std::ostream& out;
  std::ostream& err;
};

// --- stormer ---------------------------------------------------------------

void stormer_check(const Context& c, const std::string& arg, stormer::Convention conv) {
  const Integer x0 = parse_integer(arg);
  const stormer::StormerVerdict v = stormer::is_stormer(x0, conv);
  const std::string conv_name(stormer::to_string(conv));
  const Integer bound = conv == stormer::Convention::Strict ? Integer(2 * x0 + 1) : Integer(2 * x0);
  switch (c.format) {
    case Format::Text:
      c.out << x0 << (v.is_stormer ? " is" : " is not") << " a Størmer number (" << conv_name
            << "): largest prime factor of " << x0 << "^2+1 is " << v.largest_prime_factor
            << (v.is_stormer ? " >= " : " < ") << bound << "\n";
      break;
    case Format::Json:
      c.out << json{{"x0", integer_to_json(x0)},
                    {"is_stormer", v.is_stormer},
                    {"witness_prime", v.witness_prime ? integer_to_json(*v.witness_prime) : json(nullptr)},
                    {"largest_prime_factor", integer_to_json(v.largest_prime_factor)},
                    {"convention", conv_name}}
                   .dump()
            << "\n";
      break;
    case Format::Csv:
      c.out << "x0,is_stormer,witness_prime,largest_prime_factor,convention\n"
            << x0 << "," << (v.is_stormer ? "true" : "false") << ","
            << (v.witness_prime ? v.witness_prime->get_str() : "") << "," << v.largest_prime_factor
            << "," << conv_name << "\n";
      break;
  }
}

void stormer_list(const Context& c, std::uint64_t limit, stormer::Convention conv) {
  ProgressLine progress(c.err, "enumerating");
  stormer::Progress report;
  if (limit >= 100000) report = std::ref(progress);
  const auto values = stormer::enumerate_stormer(limit, conv, 0, report);
  switch (c.format) {
    case Format::Text:
      for (std::size_t i = 0; i < values.size(); ++i) c.out << (i ? " " : "") << values[i];
      c.out << "\n";
      break;
    case Format::Json:
      c.out << json{{"limit", limit},
                    {"convention", stormer::to_string(conv)},
                    {"count", values.size()},
                    {"values", values}}
                   .dump()
            << "\n";
      break;
    case Format::Csv:
      c.out << "x0\n";
      for (auto v : values) c.out << v << "\n";
      break;
  }
}

void stormer_of_prime(const Context& c, const std::string& arg) {
  const stormer::StormerPair pair = stormer::stormer_of_prime(parse_integer(arg));
  switch (c.format) {
    case Format::Text:
      c.out << "S(" << pair.p << ") = " << pair.x0 << "\n";
      break;
    case Format::Json:
      c.out << json{{"p", integer_to_json(pair.p)}, {"x0", integer_to_json(pair.x0)}}.dump() << "\n";
      break;
    case Format::Csv:
      c.out << "p,x0\n" << pair.p << "," << pair.x0 << "\n";
      break;
  }
}

void stormer_table(const Context& c, std::uint64_t limit) {
  const auto pairs = stormer::prime_stormer_table(limit);
  switch (c.format) {
    case Format::Text:
      for (const auto& p : pairs) c.out << "S(" << p.p << ") = " << p.x0 << "\n";
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& p : pairs) arr.push_back({{"p", integer_to_json(p.p)}, {"x0", integer_to_json(p.x0)}});
      c.out << json{{"prime_limit", limit}, {"pairs", arr}}.dump() << "\n";
      break;
    }
    case Format::Csv:
      c.out << "p,x0\n";
      for (const auto& p : pairs) c.out << p.p << "," << p.x0 << "\n";
      break;
  }
}

// --- twosquares ------------------------------------------------------------

void two_squares(const Context& c, const std::string& arg) {
  const twosquares::TwoSquares t = twosquares::two_squares(parse_integer(arg));
  switch (c.format) {
    case Format::Text:
      c.out << "palindrome [" << join(t.palindrome, ",") << "]\n"
            << t.p << " = " << t.a << "² + " << t.b << "²\n";
      break;
    case Format::Json:
      c.out << json{{"p", integer_to_json(t.p)},
                    {"a", integer_to_json(t.a)},
                    {"b", integer_to_json(t.b)},
                    {"x0", integer_to_json(t.x0)},
                    {"palindrome", integers_to_json(t.palindrome)}}
                   .dump()
            << "\n";
      break;
    case Format::Csv:
      c.out << "p,a,b,x0,palindrome\n"
            << t.p << "," << t.a << "," << t.b << "," << t.x0 << "," << join(t.palindrome, " ") << "\n";
      break;
  }
}

// --- density ---------------------------------------------------------------

void density(const Context& c, const std::string& limits_text, stormer::Convention conv) {
  const auto limits = parse_limits(limits_text);
  ProgressLine progress(c.err, "counting");
  stormer::Progress report;
  if (limits.back() >= 100000) report = std::ref(progress);
  const auto reports = density::count_stormer(limits, conv, 0, report);
  switch (c.format) {
    case Format::Text:
      c.out << "limit\tcount\tratio\tln2_gap\n";
      for (const auto& r : reports) {
        c.out << r.limit << "\t" << r.count << "\t" << fmt(r.ratio) << "\t" << fmt(r.ln2_gap) << "\n";
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : reports) {
        arr.push_back({{"limit", r.limit}, {"count", r.count}, {"ratio", r.ratio}, {"ln2_gap", r.ln2_gap}});
      }
      c.out << json{{"convention", stormer::to_string(conv)}, {"reports", arr}}.dump() << "\n";
      break;
    }
    case Format::Csv:
      c.out << "limit,count,ratio,ln2_gap\n";
      for (const auto& r : reports) {
        c.out << r.limit << "," << r.count << "," << fmt(r.ratio) << "," << fmt(r.ln2_gap) << "\n";
      }
      break;
  }
}

void heuristic(const Context& c, const std::vector<std::string>& args) {
  std::vector<std::pair<std::uint64_t, double>> rows;
  for (const auto& a : args) {
    const std::uint64_t x0 = parse_positive(a);
    rows.emplace_back(x0, density::heuristic_probability(x0));
  }
  switch (c.format) {
    case Format::Text:
      for (const auto& [x0, v] : rows) {
        c.out << "heuristic_probability(" << x0 << ") = " << fmt(v, 16)
              << "  |value - ln 2| = " << fmt(std::abs(v - std::numbers::ln2)) << "\n";
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& [x0, v] : rows) {
        arr.push_back({{"x0", x0}, {"probability", v}, {"ln2_gap", std::abs(v - std::numbers::ln2)}});
      }
      c.out << arr.dump() << "\n";
      break;
    }
    case Format::Csv:
      c.out << "x0,probability,ln2_gap\n";
      for (const auto& [x0, v] : rows) {
        c.out << x0 << "," << fmt(v, 16) << "," << fmt(std::abs(v - std::numbers::ln2), 16) << "\n";
      }
      break;
  }
}

void mertens(const Context& c, const std::vector<std::string>& args) {
  std::vector<std::pair<std::uint64_t, double>> rows;
  for (const auto& a : args) {
    const std::uint64_t x = parse_positive(a);
    rows.emplace_back(x, density::mertens_gap(x));
  }
  switch (c.format) {
    case Format::Text:
      for (const auto& [x, v] : rows) c.out << "mertens_gap(" << x << ") = " << fmt(v, 16) << "\n";
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& [x, v] : rows) arr.push_back({{"x", x}, {"gap", v}});
      c.out << arr.dump() << "\n";
      break;
    }
    case Format::Csv:
      c.out << "x,gap\n";
      for (const auto& [x, v] : rows) c.out << x << "," << fmt(v, 16) << "\n";
      break;
  }
}

// --- gregory ---------------------------------------------------------------

void decompose(const Context& c, const std::vector<std::string>& args) {
  std::vector<std::pair<Integer, gregory::GregoryCombo>> rows;
  for (const auto& a : args) {
    const Integer n = parse_integer(a);
    rows.emplace_back(n, gregory::decompose(n));
  }
  switch (c.format) {
    case Format::Text:
      for (const auto& [n, combo] : rows) c.out << "t" << n << " = " << combo.to_string() << "\n";
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& [n, combo] : rows) {
        json j = gregory::combo_to_json(combo);
        j["n"] = integer_to_json(n);
        j["identity"] = "t" + n.get_str() + " = " + combo.to_string();
        arr.push_back(j);
      }
      c.out << (arr.size() == 1 ? arr[0] : arr).dump() << "\n";
      break;
    }
    case Format::Csv:
      c.out << "n,re,im,coef\n";
      for (const auto& [n, combo] : rows) {
        for (const auto& [term, coef] : combo.terms()) {
          c.out << n << "," << term.z().re << "," << term.z().im << "," << coef << "\n";
        }
      }
      break;
  }
}

void verify(const Context& c, const std::string& text) {
  const gregory::Identity id = gregory::parse_identity(text);
  const gregory::VerifyResult r = gregory::verify_identity(id);
  switch (c.format) {
    case Format::Text:
      c.out << (r.holds ? "true" : "false") << "\n"
            << "identity: " << id.to_string() << "\n"
            << "certificate: " << r.certificate.to_string()
            << (r.exact ? " (positive real)" : " (not a positive real)") << "\n"
            << "residual: " << fmt(static_cast<double>(r.residual), 6) << "\n";
      break;
    case Format::Json:
      c.out << json{{"identity", id.to_string()},
                    {"holds", r.holds},
                    {"exact", r.exact},
                    {"numeric", r.numeric},
                    {"certificate", gaussian_to_json(r.certificate)},
                    {"residual", static_cast<double>(r.residual)}}
                   .dump()
            << "\n";
      break;
    case Format::Csv:
      c.out << "identity,holds,exact,numeric,residual\n"
            << id.to_string() << "," << r.holds << "," << r.exact << "," << r.numeric << ","
            << fmt(static_cast<double>(r.residual), 6) << "\n";
      break;
  }
}

void lehmer(const Context& c, const std::string& a_text, const std::string& b_text, std::size_t max_terms) {
  const gregory::LehmerExpansion e =
      gregory::lehmer_expand(parse_integer(a_text), parse_integer(b_text), max_terms);
  switch (c.format) {
    case Format::Text:
      c.out << "arccot(" << e.a << "/" << e.b << ") = ";
      for (std::size_t j = 0; j < e.cotangents.size(); ++j) {
        if (j > 0) c.out << (j % 2 ? " - " : " + ");
        c.out << "arccot(" << e.cotangents[j] << ")";
      }
      if (!e.complete) c.out << (e.cotangents.size() % 2 ? " - ..." : " + ...") << " (truncated)";
      c.out << "\n";
      break;
    case Format::Json:
      c.out << json{{"a", integer_to_json(e.a)},
                    {"b", integer_to_json(e.b)},
                    {"cotangents", integers_to_json(e.cotangents)},
                    {"complete", e.complete}}
                   .dump()
            << "\n";
      break;
    case Format::Csv:
      c.out << "j,n_j,sign\n";
      for (std::size_t j = 0; j < e.cotangents.size(); ++j) {
        c.out << j << "," << e.cotangents[j] << "," << (j % 2 ? "-" : "+") << "\n";
      }
      break;
  }
}

void flatten(const Context& c, const std::string& z_text, gregory::FlattenRule rule) {
  const GaussianInt z = parse_gaussian(z_text);
  const gregory::FlattenResult r = gregory::flatten(z, rule);
  auto wrap = [](const GaussianInt& g) { return "(" + g.to_string() + ")"; };
  switch (c.format) {
    case Format::Text:
      for (const auto& s : r.steps) {
        c.out << wrap(s.input) << wrap(s.multiplier) << " = " << s.product.to_string() << "\n";
      }
      break;
    case Format::Json: {
      json steps = json::array();
      for (const auto& s : r.steps) {
        steps.push_back({{"input", gaussian_to_json(s.input)},
                         {"multiplier", gaussian_to_json(s.multiplier)},
                         {"product", gaussian_to_json(s.product)},
                         {"rhs", s.rhs}});
      }
      json mults = json::array();
      for (const auto& m : r.multipliers) mults.push_back(gaussian_to_json(m));
      c.out << json{{"z", gaussian_to_json(z)},
                    {"rule", gregory::to_string(rule)},
                    {"w", gaussian_to_json(r.w)},
                    {"multipliers", mults},
                    {"steps", steps}}
                   .dump()
            << "\n";
      break;
    }
    case Format::Csv:
      c.out << "input,multiplier,product\n";
      for (const auto& s : r.steps) {
        c.out << s.input.to_string() << "," << s.multiplier.to_string() << "," << s.product.to_string() << "\n";
      }
      break;
  }
}

void todd(const Context& c, const std::vector<std::string>& args) {
  struct Row {
    Integer n;
    bool stormer;
    bool irreducible;
    bool occurs;
  };
  std::vector<Row> rows;
  for (const auto& a : args) {
    const Integer n = parse_integer(a);
    rows.push_back({n, stormer::is_stormer(n, stormer::Convention::Inclusive).is_stormer,
                    gregory::is_irreducible(n), gregory::occurs_among_earlier(n)});
  }
  switch (c.format) {
    case Format::Text:
      for (const auto& r : rows) {
        c.out << "n=" << r.n << " stormer=" << r.stormer << " irreducible=" << r.irreducible
              << " occurs_among_earlier=" << r.occurs << "\n";
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"n", integer_to_json(r.n)},
                       {"stormer", r.stormer},
                       {"irreducible", r.irreducible},
                       {"occurs_among_earlier", r.occurs}});
      }
      c.out << arr.dump() << "\n";
      break;
    }
    case Format::Csv:
      c.out << "n,stormer,irreducible,occurs_among_earlier\n";
      for (const auto& r : rows) {
        c.out << r.n << "," << r.stormer << "," << r.irreducible << "," << r.occurs << "\n";
      }
      break;
  }
}

// --- pi --------------------------------------------------------------------

void compute_pi(const Context& c, const std::string& formula_text, const std::string& digits_text,
                const std::optional<std::string>& max_terms_text) {
  const pi::PiFormula formula = pi::resolve_formula(formula_text);
  const Integer digits = parse_integer(digits_text);
  if (sgn(digits) <= 0 || !to_i64(digits)) throw ParseError("--digits must be a positive integer");
  pi::PiOptions options;
  if (max_terms_text) options.max_terms = parse_positive(*max_terms_text);
  options.workers = worker_count();
  ProgressLine progress(c.err, "series");
  if (digits >= 5000) {
    options.progress = [&](std::size_t done, std::size_t total) { progress(done, total); };
  }
  const pi::PiResult r = pi::compute_pi(formula, *to_i64(digits), options);
  switch (c.format) {
    case Format::Text:
      c.out << r.digits << "\n";
      if (options.max_terms) c.err << "correct digits (tail bound): " << r.correct_digits << "\n";
      break;
    case Format::Json:
      c.out << json{{"formula", formula.to_string()},
                    {"digits", r.digits},
                    {"terms_used", r.terms_used},
                    {"requested_digits", r.requested_digits},
                    {"capped", r.capped},
                    {"correct_digits", r.correct_digits}}
                   .dump()
            << "\n";
      break;
    case Format::Csv:
      c.out << "formula,requested_digits,correct_digits,digits\n"
            << formula.to_string() << "," << r.requested_digits << "," << r.correct_digits << ","
            << r.digits << "\n";
      break;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Størmer numbers, two-squares decompositions, Gregory number reduction and π"};
  app.name("stk");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "text";
  std::string out_path;
  app.add_option("--format", format_text, "Output format: text, json or csv");
  app.add_option("--out", out_path, "Write output to this file instead of standard output");

  std::string conv_text;
  std::string arg1;
  std::string arg2;
  std::vector<std::string> args;
  std::string limit_text;

  auto* stormer_cmd = app.add_subcommand("stormer", "Størmer numbers and the map S(p)");
  stormer_cmd->require_subcommand(1);
  auto* check_cmd = stormer_cmd->add_subcommand("check", "Classify x0 by the largest prime factor of x0²+1");
  check_cmd->add_option("x0", arg1)->required();
  check_cmd->add_option("--convention", conv_text, "strict (default) or inclusive");
  auto* list_cmd = stormer_cmd->add_subcommand("list", "All Størmer numbers up to a limit");
  list_cmd->add_option("--limit", limit_text)->required();
  list_cmd->add_option("--convention", conv_text, "inclusive (default) or strict");
  auto* of_prime_cmd = stormer_cmd->add_subcommand("of-prime", "S(p) for a prime p ≡ 1 (mod 4)");
  of_prime_cmd->add_option("p", arg1)->required();
  auto* table_cmd = stormer_cmd->add_subcommand("table", "Pairs (p, S(p)) for primes up to a limit");
  table_cmd->add_option("--limit", limit_text)->required();

  auto* squares_cmd = app.add_subcommand("twosquares", "p = a² + b² from the palindromic continuant");
  squares_cmd->add_option("p", arg1)->required();

  auto* density_cmd = app.add_subcommand("density", "Counts of Størmer numbers against ln 2");
  density_cmd->add_option("--limits", limit_text, "Comma-separated ascending limits")->required();
  density_cmd->add_option("--convention", conv_text, "strict (default) or inclusive");

  auto* heuristic_cmd = app.add_subcommand("heuristic", "Heuristic probability that x0 is a Størmer number");
  heuristic_cmd->add_option("x0", args)->required();
  auto* mertens_cmd = app.add_subcommand("mertens", "Sum of 1/p for p <= x minus ln ln x");
  mertens_cmd->add_option("x", args)->required();

  auto* gregory_cmd = app.add_subcommand("gregory", "Gregory numbers t_n = arctan(1/n)");
  gregory_cmd->require_subcommand(1);
  auto* decompose_cmd = gregory_cmd->add_subcommand("decompose", "Express t_n over Størmer numbers");
  decompose_cmd->add_option("n", args)->required();
  auto* verify_cmd = gregory_cmd->add_subcommand("verify", "Check an identity such as \"t1 = 4*t5 - t239\"");
  verify_cmd->add_option("identity", arg1)->required();
  std::size_t lehmer_terms = 64;
  auto* lehmer_cmd = gregory_cmd->add_subcommand("lehmer", "Alternating arccot expansion of a/b");
  lehmer_cmd->add_option("a", arg1)->required();
  lehmer_cmd->add_option("b", arg2)->required();
  lehmer_cmd->add_option("--max-terms", lehmer_terms);
  std::string rule_text = "prefer-unit-imaginary";
  auto* flatten_cmd = gregory_cmd->add_subcommand("flatten", "Flatten a Gaussian integer to the form x ± i");
  flatten_cmd->add_option("z", arg1, "e.g. 18-5i")->required();
  flatten_cmd->add_option("--rule", rule_text, "prefer-unit-imaginary (default) or minimal-norm");
  auto* todd_cmd = gregory_cmd->add_subcommand("todd", "Irreducibility and the earlier-factor criterion");
  todd_cmd->add_option("n", args)->required();

  std::string formula_text = "machin";
  std::string digits_text;
  std::optional<std::string> max_terms_text;
  auto* pi_cmd = app.add_subcommand("pi", "Digits of π from a verified Machin-like formula");
  pi_cmd->add_option("--formula", formula_text, "machin, vega, euler, stormer1896 or an identity");
  pi_cmd->add_option("--digits", digits_text, "Digits including the leading 3")->required();
  pi_cmd->add_option("--max-terms", max_terms_text, "Cap on terms per series");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "stk: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream buffer;
  buffer << std::boolalpha;
  try {
    const Context c{parse_format(format_text), buffer, err};
    auto convention = [&](stormer::Convention fallback) {
      return conv_text.empty() ? fallback : stormer::parse_convention(conv_text);
    };
    if (check_cmd->parsed()) {
      stormer_check(c, arg1, convention(stormer::Convention::Strict));
    } else if (list_cmd->parsed()) {
      stormer_list(c, parse_positive(limit_text), convention(stormer::Convention::Inclusive));
    } else if (of_prime_cmd->parsed()) {
      stormer_of_prime(c, arg1);
    } else if (table_cmd->parsed()) {
      stormer_table(c, parse_positive(limit_text));
    } else if (squares_cmd->parsed()) {
      two_squares(c, arg1);
    } else if (density_cmd->parsed()) {
      density(c, limit_text, convention(stormer::Convention::Strict));
    } else if (heuristic_cmd->parsed()) {
      heuristic(c, args);
    } else if (mertens_cmd->parsed()) {
      mertens(c, args);
    } else if (decompose_cmd->parsed()) {
      decompose(c, args);
    } else if (verify_cmd->parsed()) {
      verify(c, arg1);
    } else if (lehmer_cmd->parsed()) {
      lehmer(c, arg1, arg2, lehmer_terms);
    } else if (flatten_cmd->parsed()) {
      flatten(c, arg1, gregory::parse_flatten_rule(rule_text));
    } else if (todd_cmd->parsed()) {
      todd(c, args);
    } else if (pi_cmd->parsed()) {
      compute_pi(c, formula_text, digits_text, max_terms_text);
    }
  } catch (const ParseError& e) {
    err << "stk: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "stk: " << e.what() << "\n";
    return 3;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "stk: cannot open '" << out_path << "' for writing\n";
      return 2;
    }
    file << buffer.str();
  }
  return 0;
}

}  // namespace stk::cli
