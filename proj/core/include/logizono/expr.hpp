#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "logizono/binvec.hpp"

namespace logizono {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Reference to a model variable. `next_state` marks `name'`, the value
/// already computed for `name` earlier in the same step.
struct VarRef {
  std::string name;
  bool next_state = false;
};

/// A literal bitstring such as `0101`.
struct Const {
  BinaryVector value;
};

struct NotExpr {
  ExprPtr child;
};

struct GateExpr {
  Gate gate;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  std::variant<VarRef, Const, NotExpr, GateExpr> node;
};

ExprPtr make_var(std::string name, bool next_state = false);
ExprPtr make_const(BinaryVector value);
ExprPtr make_not(ExprPtr child);
ExprPtr make_gate(Gate gate, ExprPtr lhs, ExprPtr rhs);

/// Grammar, loosest binding first:
///
///   or    := xor ('|' xor)*
///   xor   := and ('^' and)*
///   and   := unary ('&' unary)*
///   unary := '!' unary | primary
///   primary := ident ["'"] | GATE '(' or ',' or ')' | NOT '(' or ')'
///            | bits | '(' or ')'
///
/// GATE is any gate name, case-insensitive. Binary operators associate to
/// the left. Throws ParseError with a 1-based column.
ExprPtr parse_expr(std::string_view text);

/// Prints in a form parse_expr reads back to an equal tree.
std::string to_string(const Expr& expr);

bool structurally_equal(const Expr& a, const Expr& b);

/// Every variable referenced, in first-seen order. Primed and unprimed
/// references to one name are reported separately.
std::vector<VarRef> referenced_vars(const Expr& expr);

}  // namespace logizono
