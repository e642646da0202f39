#pragma once

#include <json.hpp>

#include "stirnum/polynomial.hpp"

namespace stirnum {

/// JSON array of exact coefficient strings, constant term first; the zero
/// polynomial is the empty array.
nlohmann::ordered_json poly_to_json(const Polynomial& p);

/// Inverse of poly_to_json; accepts non-canonical input (trailing zeros are
/// trimmed). Throws std::invalid_argument on anything but an array of
/// rational strings.
Polynomial poly_from_json(const nlohmann::json& j);

}  // namespace stirnum
