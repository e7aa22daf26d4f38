#include "logizono/explicit_reach.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "logizono/errors.hpp"
#include "logizono/eval.hpp"

namespace logizono {

namespace {

// Cartesian product of `sets`, each tuple concatenated in order.
std::vector<BinaryVector> product(const std::vector<const std::vector<BinaryVector>*>& sets,
                                  const Limits& limits, const char* what) {
  std::size_t total = 1;
  for (const auto* s : sets) {
    total *= s->size();
    if (total > limits.max_points) {
      throw CapacityError(std::string(what) + " exceeds the point cap of " +
                          std::to_string(limits.max_points));
    }
  }
  std::vector<BinaryVector> out;
  out.reserve(total);
  std::vector<std::size_t> digit(sets.size(), 0);
  std::vector<BinaryVector> parts(sets.size());
  for (std::size_t c = 0; c < total; ++c) {
    for (std::size_t i = 0; i < sets.size(); ++i) parts[i] = (*sets[i])[digit[i]];
    out.push_back(concat(parts));
    for (std::size_t i = 0; i < digit.size(); ++i) {
      if (++digit[i] < sets[i]->size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

std::vector<BinaryVector> dedupe(std::vector<BinaryVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct Layout {
  std::vector<std::size_t> offset;  // per variable index, within its joint vector
};

Layout layout_of(const Model& model) {
  Layout l;
  l.offset.assign(model.variables().size(), 0);
  std::size_t s = 0;
  for (auto i : model.states()) {
    l.offset[i] = s;
    s += model.variables()[i].dim;
  }
  std::size_t u = 0;
  for (auto i : model.inputs()) {
    l.offset[i] = u;
    u += model.variables()[i].dim;
  }
  return l;
}

// Binds one sample's values and the step's next-state values by variable index.
struct Sample {
  std::vector<BinaryVector> current;
  std::vector<BinaryVector> next;
};

}  // namespace

ExplicitSet explicit_initial(const Model& model, const Limits& limits) {
  std::vector<std::vector<BinaryVector>> deduped;
  for (auto i : model.states()) deduped.push_back(dedupe(model.variables()[i].initial()));
  std::vector<const std::vector<BinaryVector>*> sets;
  for (const auto& s : deduped) sets.push_back(&s);
  return ExplicitSet(model.state_bits(), product(sets, limits, "initial joint set"));
}

ExplicitSet project_state(const Model& model, const ExplicitSet& joint, std::size_t state) {
  std::size_t offset = 0;
  for (std::size_t s = 0; s < state; ++s) offset += model.variables()[model.states()[s]].dim;
  const std::size_t dim = model.variables()[model.states().at(state)].dim;
  std::vector<BinaryVector> pts;
  pts.reserve(joint.size());
  for (const auto& p : joint.points()) pts.push_back(p.slice(offset, dim));
  return ExplicitSet(dim, std::move(pts));
}

ExplicitSet explicit_step(const Model& model, const ExplicitSet& current, std::size_t k,
                          const ExplicitReachOptions& options) {
  const auto& vars = model.variables();
  const auto layout = layout_of(model);

  std::vector<std::vector<BinaryVector>> input_sets;
  for (auto i : model.inputs()) input_sets.push_back(dedupe(vars[i].input_at(k)));
  std::vector<const std::vector<BinaryVector>*> in_ptrs;
  for (const auto& s : input_sets) in_ptrs.push_back(&s);
  const auto inputs = product(in_ptrs, options.limits, "input product");
  if (current.size() * inputs.size() > options.limits.max_points) {
    throw CapacityError("explicit step needs " +
                        std::to_string(current.size() * inputs.size()) + " samples");
  }

  // Unpack every (x, u) sample into per-variable values.
  std::vector<Sample> samples;
  samples.reserve(current.size() * inputs.size());
  for (const auto& x : current.points()) {
    for (const auto& u : inputs) {
      Sample s;
      s.current.resize(vars.size());
      s.next.resize(vars.size());
      for (auto i : model.states()) s.current[i] = x.slice(layout.offset[i], vars[i].dim);
      for (auto i : model.inputs()) s.current[i] = u.slice(layout.offset[i], vars[i].dim);
      samples.push_back(std::move(s));
    }
  }

  auto var_index = [&](const VarRef& r) { return *model.find(r.name); };

  if (!options.break_next_state_deps) {
    std::vector<BinaryVector> out;
    out.reserve(samples.size());
    for (auto& s : samples) {
      auto lookup = [&](const VarRef& r) -> const BinaryVector& {
        const auto i = var_index(r);
        return r.next_state ? s.next[i] : s.current[i];
      };
      for (const auto& u : model.updates()) s.next[u.target] = eval_point(*u.expr, lookup);
      std::vector<BinaryVector> parts;
      parts.reserve(model.states().size());
      for (auto i : model.states()) parts.push_back(s.next[i]);
      out.push_back(concat(parts));
    }
    return ExplicitSet(model.state_bits(), std::move(out));
  }

  // Dependency-dropping variant: a primed reference ranges over the
  // marginal next-state set of its variable, independently of the sample.
  std::vector<std::vector<BinaryVector>> marginal(vars.size());
  // candidates[sample][var] = values the variable may take from that sample.
  std::vector<std::vector<std::vector<BinaryVector>>> candidates(
      samples.size(), std::vector<std::vector<BinaryVector>>(vars.size()));
  for (const auto& u : model.updates()) {
    std::vector<std::size_t> primed;
    for (const auto& r : referenced_vars(*u.expr)) {
      if (r.next_state) primed.push_back(var_index(r));
    }
    std::unordered_set<BinaryVector> seen;
    for (std::size_t si = 0; si < samples.size(); ++si) {
      auto& s = samples[si];
      std::vector<std::size_t> digit(primed.size(), 0);
      std::size_t combos = 1;
      for (auto p : primed) combos *= marginal[p].size();
      std::vector<BinaryVector> values;
      for (std::size_t c = 0; c < combos; ++c) {
        for (std::size_t j = 0; j < primed.size(); ++j) s.next[primed[j]] = marginal[primed[j]][digit[j]];
        auto lookup = [&](const VarRef& r) -> const BinaryVector& {
          const auto i = var_index(r);
          return r.next_state ? s.next[i] : s.current[i];
        };
        values.push_back(eval_point(*u.expr, lookup));
        for (std::size_t j = 0; j < digit.size(); ++j) {
          if (++digit[j] < marginal[primed[j]].size()) break;
          digit[j] = 0;
        }
      }
      values = dedupe(std::move(values));
      for (const auto& v : values) {
        if (seen.insert(v).second) marginal[u.target].push_back(v);
      }
      candidates[si][u.target] = std::move(values);
    }
  }
  std::vector<BinaryVector> out;
  for (std::size_t si = 0; si < samples.size(); ++si) {
    std::vector<const std::vector<BinaryVector>*> per_state;
    for (auto i : model.states()) per_state.push_back(&candidates[si][i]);
    auto tuples = product(per_state, options.limits, "next-state product");
    out.insert(out.end(), std::make_move_iterator(tuples.begin()),
               std::make_move_iterator(tuples.end()));
  }
  return ExplicitSet(model.state_bits(), std::move(out));
}

std::vector<ExplicitSet> reach_explicit(const Model& model, std::size_t steps,
                                        const ExplicitReachOptions& options) {
  std::vector<ExplicitSet> out;
  out.reserve(steps + 1);
  out.push_back(explicit_initial(model, options.limits));
  for (std::size_t k = 0; k < steps; ++k) {
    try {
      out.push_back(explicit_step(model, out.back(), k, options));
    } catch (const CapacityError& e) {
      throw CapacityError("step " + std::to_string(k + 1) + ": " + e.what());
    }
    if (out.back().size() > options.limits.max_points) {
      throw CapacityError("step " + std::to_string(k + 1) + ": reachable set has " +
                          std::to_string(out.back().size()) + " points, cap is " +
                          std::to_string(options.limits.max_points));
    }
  }
  return out;
}

}  // namespace logizono
