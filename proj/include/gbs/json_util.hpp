#pragma once

#include <json.hpp>

#include "gbs/number_theory.hpp"

namespace gbs {

using Json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits, otherwise as
// decimal strings; both forms are accepted on input.
Json int_to_json(const Int& a);
Int int_from_json(const Json& j);

}  // namespace gbs
