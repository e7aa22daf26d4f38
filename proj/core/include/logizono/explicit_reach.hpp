#pragma once

#include <cstddef>
#include <vector>

#include "logizono/explicit_set.hpp"
#include "logizono/limits.hpp"
#include "logizono/model.hpp"

namespace logizono {

struct ExplicitReachOptions {
  Limits limits = Limits::from_env();
  /// A primed reference `x'` ranges over every next-state value of x in
  /// the step instead of the value computed from the same sample.
  bool break_next_state_deps = false;
};

/// R_0 .. R_steps over joint states: each point is the concatenation of all
/// state variables in declaration order. Every update of one step reads
/// the same (x, u) sample. CapacityError when a set or the per-step input
/// product exceeds `limits.max_points`.
std::vector<ExplicitSet> reach_explicit(const Model& model, std::size_t steps,
                                        const ExplicitReachOptions& options = {});

/// One step of reach_explicit, from joint state set `current` at step `k`.
ExplicitSet explicit_step(const Model& model, const ExplicitSet& current, std::size_t k,
                          const ExplicitReachOptions& options = {});

/// Joint initial set: product of the initial sets.
ExplicitSet explicit_initial(const Model& model, const Limits& limits = Limits::from_env());

/// Projection of a joint state set onto state number `state` (position in
/// Model::states()).
ExplicitSet project_state(const Model& model, const ExplicitSet& joint, std::size_t state);

}  // namespace logizono
