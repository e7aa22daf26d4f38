#include "logizono/eval.hpp"

#include <array>
#include <stdexcept>

#include "logizono/errors.hpp"

namespace logizono {

namespace {

constexpr std::array<std::pair<Algebra, std::string_view>, 3> kAlgebras{{
    {Algebra::Explicit, "explicit"},
    {Algebra::Logical, "logical"},
    {Algebra::Poly, "poly"},
}};

template <typename S>
const S& lookup(const Env<S>& env, const VarRef& ref) {
  auto it = env.find(env_key(ref));
  if (it == env.end()) throw ModelError("unbound variable '" + env_key(ref) + "'");
  return it->second;
}

LogicalZonotope eval_logical(const Expr& e, const Env<LogicalZonotope>& env) {
  return std::visit(
      [&](const auto& n) -> LogicalZonotope {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarRef>) {
          return lookup(env, n);
        } else if constexpr (std::is_same_v<T, Const>) {
          return LogicalZonotope(n.value);
        } else if constexpr (std::is_same_v<T, NotExpr>) {
          return lz_not(eval_logical(*n.child, env));
        } else {
          return lz_apply(n.gate, eval_logical(*n.lhs, env), eval_logical(*n.rhs, env));
        }
      },
      e.node);
}

PolyLogicalZonotope eval_poly(const Expr& e, const Env<PolyLogicalZonotope>& env, Mode mode,
                              const PolyEvalOptions& opt) {
  return std::visit(
      [&](const auto& n) -> PolyLogicalZonotope {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarRef>) {
          return lookup(env, n);
        } else if constexpr (std::is_same_v<T, Const>) {
          return PolyLogicalZonotope(n.value);
        } else if constexpr (std::is_same_v<T, NotExpr>) {
          return pz_not(eval_poly(*n.child, env, mode, opt));
        } else {
          auto lhs = eval_poly(*n.lhs, env, mode, opt);
          auto rhs = eval_poly(*n.rhs, env, mode, opt);
          PolyLogicalZonotope out = lhs;
          if (mode == Mode::Exact) {
            out = opt.compact_each_op ? pz_exact_apply_compact(n.gate, lhs, rhs)
                                      : pz_exact_apply(n.gate, lhs, rhs);
          } else {
            out = pz_mink_apply(n.gate, lhs, rhs);
            if (opt.compact_each_op) out = pz_compact(out);
          }
          if (mode == Mode::Minkowski && opt.reencode_above != 0 &&
              out.factor_count() > opt.reencode_above) {
            const auto pts = pz_evaluate(out, opt.limits);
            out = pz_encode_points(pts.points());
          }
          return out;
        }
      },
      e.node);
}

template <typename S>
Env<S> narrow(const Env<SetValue>& env) {
  Env<S> out;
  for (const auto& [k, v] : env) {
    const S* s = std::get_if<S>(&v);
    if (!s) throw std::invalid_argument("environment mixes set algebras at '" + k + "'");
    out.emplace(k, *s);
  }
  return out;
}

}  // namespace

std::string_view algebra_name(Algebra a) noexcept {
  for (const auto& [k, n] : kAlgebras) {
    if (k == a) return n;
  }
  return "?";
}

std::optional<Algebra> algebra_from_name(std::string_view name) noexcept {
  for (const auto& [k, n] : kAlgebras) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string_view mode_name(Mode m) noexcept { return m == Mode::Exact ? "exact" : "minkowski"; }

std::optional<Mode> mode_from_name(std::string_view name) noexcept {
  if (name == "exact") return Mode::Exact;
  if (name == "minkowski") return Mode::Minkowski;
  return std::nullopt;
}

std::string env_key(const VarRef& ref) { return ref.next_state ? ref.name + "'" : ref.name; }

BinaryVector eval_point(const Expr& expr,
                        const std::function<const BinaryVector&(const VarRef&)>& lookup_fn) {
  return std::visit(
      [&](const auto& n) -> BinaryVector {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarRef>) {
          return lookup_fn(n);
        } else if constexpr (std::is_same_v<T, Const>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, NotExpr>) {
          return bv_not(eval_point(*n.child, lookup_fn));
        } else {
          return bv_op(eval_point(*n.lhs, lookup_fn), eval_point(*n.rhs, lookup_fn), n.gate);
        }
      },
      expr.node);
}

ExplicitSet eval_expr(const Expr& expr, const Env<ExplicitSet>& env, const Limits& limits) {
  const auto refs = referenced_vars(expr);
  std::vector<const ExplicitSet*> sets;
  std::size_t combos = 1;
  for (const auto& r : refs) {
    sets.push_back(&lookup(env, r));
    combos *= sets.back()->size();
    if (combos > limits.max_points) {
      throw CapacityError("explicit evaluation needs more than " +
                          std::to_string(limits.max_points) + " samples");
    }
  }
  std::unordered_map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < refs.size(); ++i) slot.emplace(env_key(refs[i]), i);

  // Odometer over the product of the referenced sets.
  std::vector<std::size_t> digit(refs.size(), 0);
  std::vector<BinaryVector> points;
  points.reserve(combos);
  auto value_of = [&](const VarRef& r) -> const BinaryVector& {
    const auto i = slot.at(env_key(r));
    return sets[i]->points()[digit[i]];
  };
  for (std::size_t c = 0; c < combos; ++c) {
    points.push_back(eval_point(expr, value_of));
    for (std::size_t i = 0; i < digit.size(); ++i) {
      if (++digit[i] < sets[i]->size()) break;
      digit[i] = 0;
    }
  }
  const std::size_t dim = points.front().dim();
  return ExplicitSet(dim, std::move(points));
}

LogicalZonotope eval_expr(const Expr& expr, const Env<LogicalZonotope>& env) {
  return eval_logical(expr, env);
}

PolyLogicalZonotope eval_expr(const Expr& expr, const Env<PolyLogicalZonotope>& env, Mode mode,
                              const PolyEvalOptions& options) {
  return eval_poly(expr, env, mode, options);
}

SetValue eval_expr(const Expr& expr, const Env<SetValue>& env, Algebra algebra, Mode mode,
                   const Limits& limits) {
  if (mode == Mode::Exact && algebra != Algebra::Poly) {
    throw std::invalid_argument("exact mode requires the poly algebra, not " +
                                std::string(algebra_name(algebra)));
  }
  switch (algebra) {
    case Algebra::Explicit: return eval_expr(expr, narrow<ExplicitSet>(env), limits);
    case Algebra::Logical: return eval_expr(expr, narrow<LogicalZonotope>(env));
    case Algebra::Poly: {
      PolyEvalOptions po;
      po.limits = limits;
      return eval_expr(expr, narrow<PolyLogicalZonotope>(env), mode, po);
    }
  }
  throw std::invalid_argument("unknown algebra");
}

Algebra algebra_of(const SetValue& value) noexcept {
  switch (value.index()) {
    case 0: return Algebra::Explicit;
    case 1: return Algebra::Logical;
    default: return Algebra::Poly;
  }
}

ExplicitSet evaluate(const SetValue& value, const Limits& limits) {
  if (const auto* s = std::get_if<ExplicitSet>(&value)) return *s;
  if (const auto* l = std::get_if<LogicalZonotope>(&value)) return lz_evaluate(*l, limits);
  return pz_evaluate(std::get<PolyLogicalZonotope>(value), limits);
}

}  // namespace logizono
