#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>

#include "logizono/explicit_set.hpp"
#include "logizono/expr.hpp"
#include "logizono/limits.hpp"
#include "logizono/logical_zonotope.hpp"
#include "logizono/poly_zonotope.hpp"

namespace logizono {

enum class Algebra { Explicit, Logical, Poly };
enum class Mode { Minkowski, Exact };

std::string_view algebra_name(Algebra a) noexcept;
std::optional<Algebra> algebra_from_name(std::string_view name) noexcept;
std::string_view mode_name(Mode m) noexcept;
std::optional<Mode> mode_from_name(std::string_view name) noexcept;

using SetValue = std::variant<ExplicitSet, LogicalZonotope, PolyLogicalZonotope>;

/// Environment key of a reference: "x" or "x'".
std::string env_key(const VarRef& ref);

template <typename S>
using Env = std::unordered_map<std::string, S>;

/// One concrete evaluation; `lookup` supplies each referenced value.
BinaryVector eval_point(const Expr& expr,
                        const std::function<const BinaryVector&(const VarRef&)>& lookup);

/// Per-sample semantics: every distinct variable takes one value from its
/// set and all of its occurrences see that value. CapacityError when the
/// product of the referenced sets exceeds `limits.max_points`.
ExplicitSet eval_expr(const Expr& expr, const Env<ExplicitSet>& env,
                      const Limits& limits = Limits::from_env());

/// Gate by gate with logical-zonotope operations. Over-approximates.
LogicalZonotope eval_expr(const Expr& expr, const Env<LogicalZonotope>& env);

/// Growth control for poly evaluation. Neither option changes the set.
struct PolyEvalOptions {
  /// pz_compact every intermediate result. Keeps the value for every
  /// assignment but stops cross terms from multiplying.
  bool compact_each_op = false;
  /// Minkowski mode only: an intermediate result with more factors than
  /// this is replaced by pz_encode_points of its points. Its factors are
  /// fresh and private, so this is exact. 0 disables.
  std::size_t reencode_above = 0;
  Limits limits = Limits::from_env();
};

/// Gate by gate with Minkowski or exact operations. In exact mode repeated
/// occurrences of a variable share its factors.
PolyLogicalZonotope eval_expr(const Expr& expr, const Env<PolyLogicalZonotope>& env, Mode mode,
                              const PolyEvalOptions& options = {});

/// Dispatches on the held alternative. Throws std::invalid_argument on a
/// mode/algebra mismatch (exact mode outside poly) or a mixed environment.
SetValue eval_expr(const Expr& expr, const Env<SetValue>& env, Algebra algebra, Mode mode,
                   const Limits& limits = Limits::from_env());

Algebra algebra_of(const SetValue& value) noexcept;
ExplicitSet evaluate(const SetValue& value, const Limits& limits = Limits::from_env());

}  // namespace logizono
