#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logizono/eval.hpp"
#include "logizono/limits.hpp"
#include "logizono/model.hpp"

namespace logizono {

struct ReachOptions {
  Algebra algebra = Algebra::Poly;
  Mode mode = Mode::Exact;
  Limits limits = Limits::from_env();
  /// Treat each primed reference as independent of the update that
  /// produced it (explicit: marginal set; poly: fresh identifiers).
  bool break_next_state_deps = false;
  /// Poly only. After each step, a group of state variables linked by
  /// shared factors that uses more than this many factors is enumerated
  /// jointly and re-encoded exactly over ceil(log2 |set|) fresh factors.
  /// In Minkowski mode the same bound applies to intermediate results.
  /// 0 disables.
  std::size_t reencode_above = 12;
  /// Poly only. pz_simplify each state whose factor count exceeds this.
  /// 0 disables. Simplifying a single variable can lose cross-variable
  /// dependencies, so sizes may change when enabled.
  std::size_t simplify_above = 0;
  /// Keep per-variable sets in the step records.
  bool keep_sets = true;
};

struct StepRecord {
  std::size_t step = 0;
  /// One set per state variable, in declaration order. Empty when
  /// keep_sets is off.
  std::vector<SetValue> sets;
  /// Joint state set; filled for the explicit algebra only.
  std::optional<ExplicitSet> joint;
  /// Distinct concatenated state vectors.
  std::size_t joint_size = 0;
  /// Sum over variables of each variable's own set size.
  std::size_t marginal_size = 0;
  /// Cumulative seconds spent in the reach loop up to this step, size
  /// computations excluded.
  double time_seconds = 0.0;
};

struct ReachResult {
  Algebra algebra = Algebra::Poly;
  Mode mode = Mode::Exact;
  std::vector<std::string> state_names;
  std::vector<StepRecord> records;
};

/// Runs max(steps) steps and records the requested ones (duplicates
/// removed, ascending). Throws CapacityError naming the failing step, or
/// std::invalid_argument for exact mode outside poly.
ReachResult reach(const Model& model, std::span<const std::size_t> steps,
                  const ReachOptions& options = {});

/// Convenience for a single horizon.
ReachResult reach(const Model& model, std::size_t steps, const ReachOptions& options = {});

/// Every step 0..steps, with callback access to the per-variable sets.
/// Returning false from `visit` stops the run early.
void reach_each(const Model& model, std::size_t steps, const ReachOptions& options,
                const std::function<bool(std::size_t step, std::span<const SetValue> sets)>& visit);

/// Joint set of per-variable values in one algebra. Logical variables are
/// independent, so this is their Cartesian product; poly variables are
/// enumerated over the union of their identifiers.
ExplicitSet joint_set(std::span<const SetValue> sets, const Limits& limits = Limits::from_env());

/// |joint_set|, computed without enumeration where possible.
std::size_t joint_size(std::span<const SetValue> sets, const Limits& limits = Limits::from_env());

/// Sum of per-variable set sizes.
std::size_t marginal_size(std::span<const SetValue> sets, const Limits& limits = Limits::from_env());

}  // namespace logizono
