#include "logizono/expr.hpp"

#include <cctype>
#include <optional>

#include "logizono/errors.hpp"

namespace logizono {

ExprPtr make_var(std::string name, bool next_state) {
  return std::make_shared<const Expr>(Expr{VarRef{std::move(name), next_state}});
}

ExprPtr make_const(BinaryVector value) {
  return std::make_shared<const Expr>(Expr{Const{std::move(value)}});
}

ExprPtr make_not(ExprPtr child) {
  return std::make_shared<const Expr>(Expr{NotExpr{std::move(child)}});
}

ExprPtr make_gate(Gate gate, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{GateExpr{gate, std::move(lhs), std::move(rhs)}});
}

namespace {

enum class Tok { Ident, Bits, Bang, Amp, Caret, Pipe, Prime, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  ExprPtr parse() {
    auto e = parse_or();
    if (cur_.kind != Tok::End) {
      throw ParseError("unexpected " + describe(cur_) + " at column " +
                           std::to_string(cur_.column) + "; expected an operator or end of input",
                       cur_.column);
    }
    return e;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    const std::size_t column = start + 1;
    if (pos_ == text_.size()) {
      cur_ = {Tok::End, {}, column};
      return;
    }
    const char ch = text_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      cur_ = {k, text_.substr(start, 1), column};
    };
    switch (ch) {
      case '!': return single(Tok::Bang);
      case '&': return single(Tok::Amp);
      case '^': return single(Tok::Caret);
      case '|': return single(Tok::Pipe);
      case '\'': return single(Tok::Prime);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      default: break;
    }
    if (ch == '0' || ch == '1') {
      while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) ++pos_;
      if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
        throw ParseError("malformed bit literal at column " + std::to_string(column), column);
      }
      cur_ = {Tok::Bits, text_.substr(start, pos_ - start), column};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      cur_ = {Tok::Ident, text_.substr(start, pos_ - start), column};
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, ch) + "' at column " +
                         std::to_string(column),
                     column);
  }

  static bool is_ident_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  }

  static bool starts_operand(Tok k) {
    return k == Tok::Ident || k == Tok::Bits || k == Tok::Bang || k == Tok::LParen;
  }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) {
      throw ParseError("expected " + std::string(what) + " at column " +
                           std::to_string(cur_.column) + ", found " + describe(cur_),
                       cur_.column);
    }
    advance();
  }

  // Shared loop for the three left-associative infix levels.
  template <typename Next>
  ExprPtr parse_infix(Tok op, Gate gate, Next next) {
    auto lhs = (this->*next)();
    while (cur_.kind == op) {
      const Token op_tok = cur_;
      advance();
      if (!starts_operand(cur_.kind)) {
        throw ParseError("expected an operand after '" + std::string(op_tok.text) +
                             "' at column " + std::to_string(op_tok.column) + ", found " +
                             describe(cur_),
                         op_tok.column);
      }
      lhs = make_gate(gate, std::move(lhs), (this->*next)());
    }
    return lhs;
  }

  ExprPtr parse_or() { return parse_infix(Tok::Pipe, Gate::Or, &Parser::parse_xor); }
  ExprPtr parse_xor() { return parse_infix(Tok::Caret, Gate::Xor, &Parser::parse_and); }
  ExprPtr parse_and() { return parse_infix(Tok::Amp, Gate::And, &Parser::parse_unary); }

  ExprPtr parse_unary() {
    if (cur_.kind == Tok::Bang) {
      const Token bang = cur_;
      advance();
      if (!starts_operand(cur_.kind)) {
        throw ParseError("expected an operand after '!' at column " +
                             std::to_string(bang.column) + ", found " + describe(cur_),
                         bang.column);
      }
      return make_not(parse_unary());
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    const Token t = cur_;
    switch (t.kind) {
      case Tok::Bits:
        advance();
        return make_const(BinaryVector::from_string(t.text));
      case Tok::LParen: {
        advance();
        auto e = parse_or();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident: {
        advance();
        if (cur_.kind == Tok::LParen) {
          const auto gate = gate_from_name(t.text);
          if (!gate) {
            throw ParseError("unknown function '" + std::string(t.text) + "' at column " +
                                 std::to_string(t.column),
                             t.column);
          }
          advance();
          auto lhs = parse_or();
          if (*gate == Gate::Not) {
            expect(Tok::RParen, "')'");
            return make_not(std::move(lhs));
          }
          expect(Tok::Comma, "','");
          auto rhs = parse_or();
          expect(Tok::RParen, "')'");
          return make_gate(*gate, std::move(lhs), std::move(rhs));
        }
        bool primed = false;
        if (cur_.kind == Tok::Prime) {
          primed = true;
          advance();
        }
        return make_var(std::string(t.text), primed);
      }
      default:
        throw ParseError("expected an operand at column " + std::to_string(t.column) +
                             ", found " + describe(t),
                         t.column);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, {}, 1};
};

void print(const Expr& e, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarRef>) {
          out += n.name;
          if (n.next_state) out += '\'';
        } else if constexpr (std::is_same_v<T, Const>) {
          out += n.value.to_string();
        } else if constexpr (std::is_same_v<T, NotExpr>) {
          out += '!';
          print(*n.child, out);
        } else {
          const char* infix = n.gate == Gate::Xor ? " ^ "
                              : n.gate == Gate::And ? " & "
                              : n.gate == Gate::Or  ? " | "
                                                    : nullptr;
          if (infix) {
            out += '(';
            print(*n.lhs, out);
            out += infix;
            print(*n.rhs, out);
            out += ')';
          } else {
            out += gate_name(n.gate);
            out += '(';
            print(*n.lhs, out);
            out += ", ";
            print(*n.rhs, out);
            out += ')';
          }
        }
      },
      e.node);
}

void collect(const Expr& e, std::vector<VarRef>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarRef>) {
          for (const auto& v : out) {
            if (v.name == n.name && v.next_state == n.next_state) return;
          }
          out.push_back(n);
        } else if constexpr (std::is_same_v<T, NotExpr>) {
          collect(*n.child, out);
        } else if constexpr (std::is_same_v<T, GateExpr>) {
          collect(*n.lhs, out);
          collect(*n.rhs, out);
        }
      },
      e.node);
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& expr) {
  std::string out;
  print(expr, out);
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, VarRef>) {
          return x.name == y.name && x.next_state == y.next_state;
        } else if constexpr (std::is_same_v<T, Const>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, NotExpr>) {
          return structurally_equal(*x.child, *y.child);
        } else {
          return x.gate == y.gate && structurally_equal(*x.lhs, *y.lhs) &&
                 structurally_equal(*x.rhs, *y.rhs);
        }
      },
      a.node);
}

std::vector<VarRef> referenced_vars(const Expr& expr) {
  std::vector<VarRef> out;
  collect(expr, out);
  return out;
}

}  // namespace logizono
