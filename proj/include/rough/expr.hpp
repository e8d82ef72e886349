#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rough/cera.hpp"
#include "rough/crad.hpp"
#include "rough/error.hpp"

namespace rough {

enum class UnaryOpKind { FrakL, Diamond, SimNeg, Neg };
enum class BinaryOpKind { Oplus, Odot, Circ, Rightsquig, TwoHead };

inline std::string to_string(UnaryOpKind k) {
  switch (k) {
    case UnaryOpKind::FrakL: return "L";
    case UnaryOpKind::Diamond: return "D";
    case UnaryOpKind::SimNeg: return "~";
    case UnaryOpKind::Neg: return "neg";
  }
  return "?";
}

inline std::string to_string(BinaryOpKind k) {
  switch (k) {
    case BinaryOpKind::Oplus: return "(+)";
    case BinaryOpKind::Odot: return "(.)";
    case BinaryOpKind::Circ: return "(o)";
    case BinaryOpKind::Rightsquig: return "~>";
    case BinaryOpKind::TwoHead: return "->>";
  }
  return "?";
}

/// Syntax tree of a rough expression.
struct Expr {
  enum class Kind { Set, Class, Unary, Binary };

  Kind kind = Kind::Set;
  Subset literal;
  UnaryOpKind unary = UnaryOpKind::FrakL;
  BinaryOpKind binary = BinaryOpKind::Oplus;
  std::vector<Expr> args;
  std::size_t position = 0;

  static Expr set(Subset s, std::size_t pos = 0) { return {Kind::Set, s, {}, {}, {}, pos}; }
  static Expr cls(Subset s, std::size_t pos = 0) { return {Kind::Class, s, {}, {}, {}, pos}; }
  static Expr apply(UnaryOpKind op, Expr a, std::size_t pos = 0) {
    Expr e{Kind::Unary, {}, op, {}, {}, pos};
    e.args.push_back(std::move(a));
    return e;
  }
  static Expr apply(BinaryOpKind op, Expr a, Expr b, std::size_t pos = 0) {
    Expr e{Kind::Binary, {}, {}, op, {}, pos};
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  /// Structural equality; positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Set:
      case Kind::Class: return a.literal == b.literal;
      case Kind::Unary: return a.unary == b.unary && a.args == b.args;
      case Kind::Binary: return a.binary == b.binary && a.args == b.args;
    }
    return false;
  }
};

/// Recursive-descent parser. All binary operators share one precedence tier
/// and associate to the left.
class ExprParser {
public:
  ExprParser(const Universe& universe, std::string_view text) : u_(universe), s_(text) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, "unexpected '" + std::string(s_.substr(pos_, 1)) + "'");
    return e;
  }

private:
  Expr expr() {
    Expr lhs = unary();
    while (true) {
      skip();
      const std::size_t at = pos_;
      const auto op = binop();
      if (!op) return lhs;
      Expr rhs = unary();
      lhs = Expr::apply(*op, std::move(lhs), std::move(rhs), at);
    }
  }

  std::optional<BinaryOpKind> binop() {
    for (auto k : {BinaryOpKind::Oplus, BinaryOpKind::Odot, BinaryOpKind::Circ, BinaryOpKind::Rightsquig,
                   BinaryOpKind::TwoHead}) {
      const std::string tok = to_string(k);
      if (s_.substr(pos_, tok.size()) == tok) {
        pos_ += tok.size();
        return k;
      }
    }
    return std::nullopt;
  }

  Expr unary() {
    skip();
    const std::size_t at = pos_;
    if (at == s_.size()) throw ParseError(at, "expected an operand, found end of input");
    if (s_[at] == '~' && s_.substr(at, 2) != "~>") {
      ++pos_;
      return Expr::apply(UnaryOpKind::SimNeg, unary(), at);
    }
    if (is_word(s_[at])) {
      const std::size_t save = pos_;
      const std::string w = word();
      if (w == "L") return Expr::apply(UnaryOpKind::FrakL, unary(), at);
      if (w == "D") return Expr::apply(UnaryOpKind::Diamond, unary(), at);
      if (w == "neg") return Expr::apply(UnaryOpKind::Neg, unary(), at);
      pos_ = save;
    }
    return primary();
  }

  Expr primary() {
    skip();
    const std::size_t at = pos_;
    if (at == s_.size()) throw ParseError(at, "expected an operand, found end of input");
    if (s_[at] == '(') {
      ++pos_;
      Expr e = expr();
      skip();
      if (pos_ == s_.size() || s_[pos_] != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return e;
    }
    if (s_[at] == '[') {
      ++pos_;
      skip();
      const Subset lit = setlit();
      skip();
      if (pos_ == s_.size() || s_[pos_] != ']') throw ParseError(pos_, "expected ']'");
      ++pos_;
      return Expr::cls(lit, at);
    }
    return Expr::set(setlit(), at);
  }

  Subset setlit() {
    const std::size_t at = pos_;
    if (pos_ == s_.size() || !is_word(s_[pos_])) {
      throw ParseError(at, pos_ == s_.size() ? "expected a set literal, found end of input"
                                             : "expected a set literal");
    }
    const std::string w = word();
    if (w == "L" || w == "D" || w == "neg") throw ParseError(at, "expected a set literal, found '" + w + "'");
    try {
      return u_.parse(w);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(e.what()) + " at position " + std::to_string(at));
    }
  }

  std::string word() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_word(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  static bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const Universe& u_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline Expr parse_expr(const Universe& u, std::string_view text) { return ExprParser(u, text).parse(); }

/// Canonical form: single spaces around binary operators, a space after
/// unary operators, parentheses only where left association needs them.
inline std::string print_expr(const Universe& u, const Expr& e) {
  auto wrap = [&](const Expr& sub) {
    const std::string s = print_expr(u, sub);
    return sub.kind == Expr::Kind::Binary ? "(" + s + ")" : s;
  };
  switch (e.kind) {
    case Expr::Kind::Set: return u.format(e.literal);
    case Expr::Kind::Class: return "[" + u.format(e.literal) + "]";
    case Expr::Kind::Unary: return to_string(e.unary) + " " + wrap(e.args[0]);
    case Expr::Kind::Binary:
      return print_expr(u, e.args[0]) + " " + to_string(e.binary) + " " + wrap(e.args[1]);
  }
  return {};
}

/// Evaluates an expression in a CERA. Failures carry the offending subterm.
inline MixedElement eval_expr(const CeraModel& w, const Expr& e) {
  const Universe& u = w.space().universe();
  try {
    switch (e.kind) {
      case Expr::Kind::Set: return MixedElement::type1(e.literal);
      case Expr::Kind::Class: return w.cls(e.literal);
      case Expr::Kind::Unary: {
        const MixedElement a = eval_expr(w, e.args[0]);
        switch (e.unary) {
          case UnaryOpKind::FrakL: return w.frakL(a);
          case UnaryOpKind::Diamond: return w.blacklozenge(a);
          case UnaryOpKind::SimNeg: return w.sim_neg(a);
          case UnaryOpKind::Neg: return w.partial_neg(a);
        }
        break;
      }
      case Expr::Kind::Binary: {
        const MixedElement a = eval_expr(w, e.args[0]);
        const MixedElement b = eval_expr(w, e.args[1]);
        switch (e.binary) {
          case BinaryOpKind::Oplus: return w.oplus(a, b);
          case BinaryOpKind::Odot: return w.odot(a, b);
          case BinaryOpKind::Circ: return w.circ(a, b);
          case BinaryOpKind::Rightsquig: return w.rightsquig(a, b);
          case BinaryOpKind::TwoHead: return w.two_head(a, b);
        }
        break;
      }
    }
  } catch (const EvalError&) {
    throw;
  } catch (const Error& err) {
    throw EvalError(err.kind(), print_expr(u, e), e.position, err.what());
  }
  throw EvalError(ErrorKind::Precondition, print_expr(u, e), e.position, "malformed expression");
}

inline MixedElement eval_expr(const CeraModel& w, std::string_view text) {
  return eval_expr(w, parse_expr(w.space().universe(), text));
}

/// A dialectical pair written "(x, y)" with both components expressions.
inline DialecticalPair eval_pair(const CeraModel& w, std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos || text[b] != '(' || text[e] != ')') {
    throw ParseError(b == std::string_view::npos ? 0 : b, "expected a pair '(x, y)'");
  }
  int depth = 0;
  std::optional<std::size_t> comma;
  for (std::size_t i = b + 1; i < e; ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      if (comma) throw ParseError(i, "a pair has exactly two components");
      comma = i;
    }
  }
  if (!comma) throw ParseError(e, "expected ',' between pair components");
  auto component = [&](std::size_t from, std::size_t to) {
    const std::string_view part = text.substr(from, to - from);
    try {
      return eval_expr(w, part);
    } catch (const ParseError& err) {
      throw ParseError(from + err.position(), err.detail());
    }
  };
  return {component(b + 1, *comma), component(*comma + 1, e)};
}

}  // namespace rough
