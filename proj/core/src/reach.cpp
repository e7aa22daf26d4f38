#include "logizono/reach.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <unordered_map>

#include "logizono/errors.hpp"
#include "logizono/explicit_reach.hpp"

namespace logizono {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<BinaryVector> distinct(const std::vector<BinaryVector>& points) {
  std::vector<BinaryVector> v = points;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

LogicalZonotope enclose(const std::vector<BinaryVector>& points, const LogicalZonotope*) {
  return lz_compact(lz_enclose_points(distinct(points)));
}

// Lemma 5 enclosure is exact for up to two points; larger sets are encoded
// exactly so initial and input sets are never over-approximated.
PolyLogicalZonotope enclose(const std::vector<BinaryVector>& points, const PolyLogicalZonotope*) {
  const auto pts = distinct(points);
  if (pts.size() <= 2) return pz_simplify(pz_enclose_points(pts));
  return pz_encode_points(pts);
}

LogicalZonotope eval_update(const Expr& e, const Env<LogicalZonotope>& env, Mode,
                            const ReachOptions&) {
  return eval_expr(e, env);
}

PolyLogicalZonotope eval_update(const Expr& e, const Env<PolyLogicalZonotope>& env, Mode mode,
                                const ReachOptions& options) {
  PolyEvalOptions po;
  po.compact_each_op = true;
  po.reencode_above = options.reencode_above;
  po.limits = options.limits;
  return eval_expr(e, env, mode, po);
}

LogicalZonotope independent_copy(const LogicalZonotope& z, const Limits&) { return z; }

// The copy owns its factors, so encoding its points is exact and usually far
// smaller than the copied polynomial.
PolyLogicalZonotope independent_copy(const PolyLogicalZonotope& z, const Limits& limits) {
  if (z.factor_count() <= 1 ||
      z.factor_count() > std::min(limits.max_factors, kMaxEnumerableFactors)) {
    return pz_fresh_copy(z);
  }
  auto encoded = pz_encode_points(pz_evaluate(z, limits).points());
  return encoded.factor_count() < z.factor_count() ? encoded : pz_fresh_copy(z);
}

LogicalZonotope compact(const LogicalZonotope& z) { return lz_compact(z); }
PolyLogicalZonotope compact(const PolyLogicalZonotope& z) { return pz_compact(z); }

// Joint set of `states` re-encoded over as few fresh factors as it needs,
// then split back into one zonotope per variable sharing those factors.
std::vector<PolyLogicalZonotope> reencode(const std::vector<PolyLogicalZonotope>& states,
                                          const Limits& limits) {
  const auto joint = pz_joint_evaluate(states, limits);
  const auto encoded = pz_encode_points(joint.points());
  std::vector<PolyLogicalZonotope> out;
  out.reserve(states.size());
  std::size_t offset = 0;
  for (const auto& s : states) {
    BinaryMatrix g(s.dim());
    for (const auto& col : encoded.generators().columns()) g.push_back(col.slice(offset, s.dim()));
    out.push_back(pz_compact(PolyLogicalZonotope(encoded.center().slice(offset, s.dim()),
                                                 std::move(g), encoded.exponents(),
                                                 encoded.ids())));
    offset += s.dim();
  }
  return out;
}

// Groups variables that are linked, directly or transitively, by a shared
// factor. Different groups are independent and can be re-encoded apart.
std::vector<std::vector<std::size_t>> factor_components(
    const std::vector<PolyLogicalZonotope>& states) {
  std::vector<std::size_t> parent(states.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::unordered_map<FactorId, std::size_t> owner;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (auto id : states[i].ids()) {
      auto [it, inserted] = owner.emplace(id, i);
      if (!inserted) parent[root(i)] = root(it->second);
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [it, inserted] = slot.emplace(root(i), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

template <typename S>
class SymbolicRun {
 public:
  SymbolicRun(const Model& model, const ReachOptions& options)
      : model_(model), options_(options) {
    for (auto i : model.states()) states_.push_back(enclose(model.variables()[i].initial(), tag()));
  }

  void step(std::size_t k) {
    const auto& vars = model_.variables();
    Env<S> env;
    for (std::size_t j = 0; j < states_.size(); ++j) {
      env.emplace(vars[model_.states()[j]].name, states_[j]);
    }
    for (auto i : model_.inputs()) env.emplace(vars[i].name, enclose(vars[i].input_at(k), tag()));
    std::vector<std::optional<S>> next(vars.size());
    for (const auto& u : model_.updates()) {
      S value = eval_update(*u.expr, env, options_.mode, options_);
      const auto& name = vars[u.target].name;
      env.insert_or_assign(name + "'", options_.break_next_state_deps ? independent_copy(value, options_.limits)
                                                                       : value);
      next[u.target] = std::move(value);
    }
    for (std::size_t j = 0; j < states_.size(); ++j) {
      states_[j] = compact(*next[model_.states()[j]]);
    }
    if constexpr (std::is_same_v<S, PolyLogicalZonotope>) reduce_factors();
  }

  const std::vector<S>& states() const noexcept { return states_; }

 private:
  static constexpr const S* tag() { return nullptr; }

  void reduce_factors() {
    if (options_.simplify_above != 0) {
      for (auto& s : states_) {
        if (s.factor_count() > options_.simplify_above) s = pz_simplify(s, options_.limits);
      }
    }
    if (options_.reencode_above == 0) return;
    const std::size_t cap = std::min(options_.limits.max_factors, kMaxEnumerableFactors);
    for (const auto& group : factor_components(states_)) {
      std::vector<PolyLogicalZonotope> part;
      for (auto i : group) part.push_back(states_[i]);
      const auto factors = pz_union_ids(part).size();
      if (factors <= options_.reencode_above || factors > cap) continue;
      auto encoded = reencode(part, options_.limits);
      if (pz_union_ids(encoded).size() >= factors) continue;
      for (std::size_t k = 0; k < group.size(); ++k) states_[group[k]] = std::move(encoded[k]);
    }
  }

  const Model& model_;
  const ReachOptions& options_;
  std::vector<S> states_;
};

std::vector<SetValue> to_values(const auto& states) {
  return std::vector<SetValue>(states.begin(), states.end());
}

void validate(const ReachOptions& options) {
  if (options.mode == Mode::Exact && options.algebra != Algebra::Poly) {
    throw std::invalid_argument("exact mode requires the poly algebra, not " +
                                std::string(algebra_name(options.algebra)));
  }
}

std::string step_prefix(std::size_t k) { return "step " + std::to_string(k) + ": "; }

// Drives any algebra one step at a time, exposing per-variable sets.
void drive(const Model& model, std::size_t steps, const ReachOptions& options,
           const std::function<bool(std::size_t, std::span<const SetValue>,
                                    const ExplicitSet*, double)>& visit) {
  validate(options);
  double elapsed = 0.0;
  auto timed = [&](auto&& fn) {
    const auto t0 = Clock::now();
    fn();
    elapsed += std::chrono::duration<double>(Clock::now() - t0).count();
  };
  auto guarded = [&](std::size_t k, auto&& fn) {
    try {
      fn();
    } catch (const CapacityError& e) {
      throw CapacityError(step_prefix(k) + e.what());
    }
  };

  if (options.algebra == Algebra::Explicit) {
    ExplicitReachOptions eo{options.limits, options.break_next_state_deps};
    ExplicitSet current(model.state_bits());
    guarded(0, [&] { current = explicit_initial(model, options.limits); });
    auto values = [&] {
      std::vector<SetValue> v;
      for (std::size_t j = 0; j < model.states().size(); ++j) {
        v.emplace_back(project_state(model, current, j));
      }
      return v;
    };
    if (!visit(0, values(), &current, elapsed)) return;
    for (std::size_t k = 0; k < steps; ++k) {
      guarded(k + 1, [&] { timed([&] { current = explicit_step(model, current, k, eo); }); });
      if (current.size() > options.limits.max_points) {
        throw CapacityError(step_prefix(k + 1) + "reachable set exceeds the point cap");
      }
      if (!visit(k + 1, values(), &current, elapsed)) return;
    }
    return;
  }

  auto run_symbolic = [&](auto* tag) {
    using S = std::remove_pointer_t<decltype(tag)>;
    std::optional<SymbolicRun<S>> run;
    guarded(0, [&] { run.emplace(model, options); });
    if (!visit(0, to_values(run->states()), nullptr, elapsed)) return;
    for (std::size_t k = 0; k < steps; ++k) {
      guarded(k + 1, [&] { timed([&] { run->step(k); }); });
      if (!visit(k + 1, to_values(run->states()), nullptr, elapsed)) return;
    }
  };
  if (options.algebra == Algebra::Logical) {
    run_symbolic(static_cast<LogicalZonotope*>(nullptr));
  } else {
    run_symbolic(static_cast<PolyLogicalZonotope*>(nullptr));
  }
}

}  // namespace

ReachResult reach(const Model& model, std::span<const std::size_t> steps,
                  const ReachOptions& options) {
  std::vector<std::size_t> wanted(steps.begin(), steps.end());
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  if (wanted.empty()) wanted.push_back(0);

  ReachResult result;
  result.algebra = options.algebra;
  result.mode = options.algebra == Algebra::Poly ? options.mode : Mode::Minkowski;
  for (auto i : model.states()) result.state_names.push_back(model.variables()[i].name);

  std::size_t next = 0;
  drive(model, wanted.back(), options,
        [&](std::size_t k, std::span<const SetValue> sets, const ExplicitSet* joint,
            double elapsed) {
          if (k != wanted[next]) return true;
          StepRecord rec;
          rec.step = k;
          rec.time_seconds = elapsed;
          try {
            if (joint) {
              rec.joint_size = joint->size();
              rec.joint = *joint;
            } else {
              rec.joint_size = joint_size(sets, options.limits);
            }
            rec.marginal_size = marginal_size(sets, options.limits);
          } catch (const CapacityError& e) {
            throw CapacityError(step_prefix(k) + e.what());
          }
          if (options.keep_sets) rec.sets.assign(sets.begin(), sets.end());
          result.records.push_back(std::move(rec));
          return ++next < wanted.size();
        });
  return result;
}

ReachResult reach(const Model& model, std::size_t steps, const ReachOptions& options) {
  const std::size_t one[] = {steps};
  return reach(model, one, options);
}

void reach_each(const Model& model, std::size_t steps, const ReachOptions& options,
                const std::function<bool(std::size_t, std::span<const SetValue>)>& visit) {
  drive(model, steps, options,
        [&](std::size_t k, std::span<const SetValue> sets, const ExplicitSet*, double) {
          return visit(k, sets);
        });
}

ExplicitSet joint_set(std::span<const SetValue> sets, const Limits& limits) {
  if (sets.empty()) throw std::invalid_argument("joint_set: no variables");
  const auto algebra = algebra_of(sets.front());
  for (const auto& s : sets) {
    if (algebra_of(s) != algebra) throw std::invalid_argument("joint_set: mixed algebras");
  }
  if (algebra == Algebra::Poly) {
    // Enumerate each factor-sharing group on its own and take the product,
    // so the cap applies per group rather than to all factors at once.
    std::vector<PolyLogicalZonotope> parts;
    std::vector<std::size_t> offset;
    std::size_t dim = 0;
    for (const auto& s : sets) {
      parts.push_back(std::get<PolyLogicalZonotope>(s));
      offset.push_back(dim);
      dim += parts.back().dim();
    }
    std::vector<BinaryVector> acc{BinaryVector(dim)};
    for (const auto& group : factor_components(parts)) {
      std::vector<PolyLogicalZonotope> g;
      for (auto i : group) g.push_back(parts[i]);
      const auto pts = pz_joint_evaluate(g, limits);
      if (acc.size() * pts.size() > limits.max_points) {
        throw CapacityError("joint set exceeds the point cap of " +
                            std::to_string(limits.max_points));
      }
      std::vector<BinaryVector> grown;
      grown.reserve(acc.size() * pts.size());
      for (const auto& a : acc) {
        for (const auto& p : pts.points()) {
          BinaryVector v = a;
          std::size_t at = 0;
          for (auto i : group) {
            v.xor_at(offset[i], p.slice(at, parts[i].dim()));
            at += parts[i].dim();
          }
          grown.push_back(std::move(v));
        }
      }
      acc = std::move(grown);
    }
    return ExplicitSet(dim, std::move(acc));
  }
  // Independent variables: Cartesian product of the per-variable sets.
  std::vector<BinaryVector> acc{BinaryVector(0)};
  std::size_t dim = 0;
  for (const auto& s : sets) {
    const auto pts = evaluate(s, limits);
    if (acc.size() * pts.size() > limits.max_points) {
      throw CapacityError("joint set exceeds the point cap of " +
                          std::to_string(limits.max_points));
    }
    std::vector<BinaryVector> grown;
    grown.reserve(acc.size() * pts.size());
    for (const auto& a : acc) {
      for (const auto& p : pts.points()) {
        BinaryVector v = a;
        v.append(p);
        grown.push_back(std::move(v));
      }
    }
    acc = std::move(grown);
    dim += pts.dim();
  }
  return ExplicitSet(dim, std::move(acc));
}

std::size_t joint_size(std::span<const SetValue> sets, const Limits& limits) {
  if (!sets.empty() && algebra_of(sets.front()) == Algebra::Logical) {
    std::size_t bits = 0;
    for (const auto& s : sets) {
      const auto* z = std::get_if<LogicalZonotope>(&s);
      if (!z) throw std::invalid_argument("joint_size: mixed algebras");
      bits += static_cast<std::size_t>(std::countr_zero(lz_size(*z)));
    }
    if (bits >= 64) throw CapacityError("joint size exceeds 2^63");
    return std::size_t{1} << bits;
  }
  if (!sets.empty() && algebra_of(sets.front()) == Algebra::Poly) {
    // Variables with no factor in common are independent: multiply.
    std::vector<PolyLogicalZonotope> parts;
    for (const auto& s : sets) {
      const auto* z = std::get_if<PolyLogicalZonotope>(&s);
      if (!z) throw std::invalid_argument("joint_size: mixed algebras");
      parts.push_back(*z);
    }
    std::size_t total = 1;
    for (const auto& group : factor_components(parts)) {
      std::vector<PolyLogicalZonotope> g;
      for (auto i : group) g.push_back(parts[i]);
      total *= pz_joint_evaluate(g, limits).size();
    }
    return total;
  }
  return joint_set(sets, limits).size();
}

std::size_t marginal_size(std::span<const SetValue> sets, const Limits& limits) {
  std::size_t total = 0;
  for (const auto& s : sets) {
    if (const auto* z = std::get_if<LogicalZonotope>(&s)) {
      total += lz_size(*z);
    } else {
      total += evaluate(s, limits).size();
    }
  }
  return total;
}

}  // namespace logizono
