#pragma once

// nlohmann::json helpers shared by serialize.cpp and report.cpp. Kept out of
// the public headers so consumers never need the vendored json.

#include "json.hpp"
#include "logizono/eval.hpp"

namespace logizono::detail {

nlohmann::json set_json(const SetValue& v);
SetValue set_from_json(const nlohmann::json& doc);

}  // namespace logizono::detail
