#pragma once

#include <json.hpp>

#include "stk/gaussian.hpp"
#include "stk/gregory.hpp"
#include "stk/integer.hpp"

namespace stk {

/// A JSON number when the value fits in 64 bits, otherwise a decimal string.
nlohmann::json integer_to_json(const Integer& n);
/// Accepts a JSON integer or a decimal string. Throws ParseError.
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json gaussian_to_json(const GaussianInt& z);

namespace gregory {

/// {"terms": [{"re": 2, "im": 1, "coef": -1}, ...]}
nlohmann::json combo_to_json(const GregoryCombo& combo);
/// Also accepts the shorthand {"n": 5, "coef": 4} for t_5. Throws ParseError.
GregoryCombo combo_from_json(const nlohmann::json& j);

}  // namespace gregory
}  // namespace stk
