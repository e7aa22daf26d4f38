#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>

namespace logizono::cli {

struct SelftestOptions {
  std::size_t trials = 500;
  std::uint64_t seed = 1;
};

/// Random operation-level checks against the explicit-set semantics.
/// Prints one line per check; returns the number of failed checks.
int run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace logizono::cli
