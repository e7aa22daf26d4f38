#pragma once

#include <cstddef>

namespace logizono {

/// Caps on brute-force enumeration.
///
/// `max_factors` bounds the number of free binary factors (independent
/// generators of a logical zonotope, dependent factors of a polynomial
/// logical zonotope) that may be enumerated, i.e. at most 2^max_factors
/// assignments. `max_points` bounds explicit point sets.
struct Limits {
  std::size_t max_factors = 24;
  std::size_t max_points = std::size_t{1} << 20;

  /// Defaults, with `max_factors` overridden by the LOGIZONO_CAP
  /// environment variable when it holds a positive integer.
  static Limits from_env();
};

/// Hard ceiling imposed by 64-bit assignment masks.
inline constexpr std::size_t kMaxEnumerableFactors = 62;

}  // namespace logizono
