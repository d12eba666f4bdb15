#include "stk/serialize.hpp"

#include <string>

#include "stk/error.hpp"

namespace stk {

nlohmann::json integer_to_json(const Integer& n) {
  if (auto v = to_i64(n)) return *v;
  return n.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return from_u64(j.get<std::uint64_t>());
    const auto v = j.get<std::int64_t>();
    return v < 0 ? Integer(-from_u64(static_cast<std::uint64_t>(-(v + 1)) + 1))
                 : from_u64(static_cast<std::uint64_t>(v));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer in JSON, got " + j.dump());
}

nlohmann::json gaussian_to_json(const GaussianInt& z) {
  return {{"re", integer_to_json(z.re)}, {"im", integer_to_json(z.im)}};
}

namespace gregory {

nlohmann::json combo_to_json(const GregoryCombo& combo) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [term, coef] : combo.terms()) {
    terms.push_back({{"re", integer_to_json(term.z().re)},
                     {"im", integer_to_json(term.z().im)},
                     {"coef", integer_to_json(coef)}});
  }
  return {{"terms", terms}};
}

GregoryCombo combo_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("expected {\"terms\": [...]}");
  }
  GregoryCombo out;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coef")) throw ParseError("term without coef: " + t.dump());
    const Integer coef = integer_from_json(t["coef"]);
    if (t.contains("n")) {
      const Integer n = integer_from_json(t["n"]);
      if (sgn(n) <= 0) throw ParseError("term index must be positive: " + t.dump());
      out.add(ArcTerm(n), coef);
    } else if (t.contains("re") && t.contains("im")) {
      const GaussianInt z(integer_from_json(t["re"]), integer_from_json(t["im"]));
      if (sgn(z.re) <= 0) throw ParseError("term needs re > 0: " + t.dump());
      out.add(z, coef);
    } else {
      throw ParseError("term needs n or re/im: " + t.dump());
    }
  }
  return out;
}

}  // namespace gregory
}  // namespace stk
