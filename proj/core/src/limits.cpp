#include "logizono/limits.hpp"

#include <cstdlib>
#include <string>

namespace logizono {

Limits Limits::from_env() {
  Limits limits;
  if (const char* cap = std::getenv("LOGIZONO_CAP"); cap != nullptr && *cap) {
    try {
      const auto value = std::stoul(cap);
      if (value > 0) limits.max_factors = value;
    } catch (const std::exception&) {
      // malformed value: keep the default
    }
  }
  return limits;
}

}  // namespace logizono
