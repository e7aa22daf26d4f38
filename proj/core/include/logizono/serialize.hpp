#pragma once

#include <string>
#include <string_view>

#include "logizono/eval.hpp"

namespace logizono {

// JSON forms, bitstrings printed index 1 first:
//   poly     {"c": "010", "G": ["011", "111"], "E": ["10", "11"], "id": [1, 2]}
//   logical  {"c": "01", "G": ["11"]}
//   explicit {"dim": 2, "points": ["01", "10"]}
// Matrices are lists of columns.

std::string to_json(const PolyLogicalZonotope& z);
std::string to_json(const LogicalZonotope& z);
std::string to_json(const ExplicitSet& s);
std::string to_json(const SetValue& v);

/// Parses any of the three forms, telling them apart by their keys
/// ("E"/"id" for poly, "points" for explicit). Throws ModelError.
SetValue set_from_json(std::string_view text);
PolyLogicalZonotope poly_from_json(std::string_view text);
LogicalZonotope logical_from_json(std::string_view text);

}  // namespace logizono
