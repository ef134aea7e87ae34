#pragma once

// JSON wire format for symbolic values.  A Laurent polynomial serializes as
//   {"vars": [names...],
//    "terms": [{"exp": [ints...], "num": "...", "den": "..."}, ...]}
// with terms in canonical order (lexicographic by exponent vector), positive
// denominators, and coprime num/den.

#include "json.hpp"

#include "wbm/laurent.hpp"

namespace wbm {

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RationalFn& f);
nlohmann::json to_json(const ScaledValue& v);

} // namespace wbm
