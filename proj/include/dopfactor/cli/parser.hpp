#pragma once

// Operator expressions in D and x.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' uint)?
//   atom   := 'D' | 'x' | rational | name | 'sqrt' '(' rational ')' | '(' expr ')'
//
// Products are noncommutative and built left to right; "D*x" is x*D + 1.
// A name is a parameter bound in ParseContext (typically a and b).

#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "dopfactor/reduce.hpp"

namespace dopfactor::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

struct ParseContext {
  /// Q(sqrt(field_base)) is where sqrt(...) literals must live; 0 means Q.
  Rational field_base;
  std::map<std::string, Scalar> params;
};

struct OperatorExpr;
using ExprPtr = std::shared_ptr<const OperatorExpr>;

struct OperatorExpr {
  struct Derivation {};
  struct Variable {};
  struct Constant {
    Scalar value;
  };
  struct Param {
    std::string name;
  };
  struct Neg {
    ExprPtr operand;
  };
  struct Binary {
    char op;  // '+', '-', '*'
    ExprPtr lhs, rhs;
  };
  struct Power {
    ExprPtr base;
    std::size_t exponent;
  };
  std::variant<Derivation, Variable, Constant, Param, Neg, Binary, Power> node;
  std::size_t position = 0;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view src, const ParseContext& ctx) : src_(src), ctx_(ctx) {}

  ExprPtr parse() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError("empty expression", pos_);
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return e;
  }

 private:
  static ExprPtr wrap(OperatorExpr e) { return std::make_shared<const OperatorExpr>(std::move(e)); }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      skip_ws();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
        const char op = src_[pos_];
        const std::size_t at = pos_++;
        ExprPtr rhs = term();
        lhs = wrap({OperatorExpr::Binary{op, lhs, rhs}, at});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '*') {
        const std::size_t at = pos_++;
        ExprPtr rhs = unary();
        lhs = wrap({OperatorExpr::Binary{'*', lhs, rhs}, at});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    skip_ws();
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      const char op = src_[pos_];
      const std::size_t at = pos_++;
      ExprPtr operand = unary();
      if (op == '+') return operand;
      return wrap({OperatorExpr::Neg{operand}, at});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      const std::size_t at = pos_++;
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '-') throw ParseError("negative exponent", pos_);
      if (pos_ == src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError("expected exponent", pos_);
      const BigInt e = integer();
      if (!e.fits_ulong_p() || e > 4096) throw ParseError("exponent too large", at);
      return wrap({OperatorExpr::Power{base, static_cast<std::size_t>(e.get_ui())}, at});
    }
    return base;
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t at = pos_;
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      skip_ws();
      if (pos_ == src_.size() || src_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return wrap({OperatorExpr::Constant{Scalar(rational())}, at});
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        name += src_[pos_++];
      if (name == "D") return wrap({OperatorExpr::Derivation{}, at});
      if (name == "x") return wrap({OperatorExpr::Variable{}, at});
      if (name == "sqrt") return sqrt_literal(at);
      if (!ctx_.params.contains(name)) throw ParseError("unknown name '" + name + "'", at);
      return wrap({OperatorExpr::Param{name}, at});
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  ExprPtr sqrt_literal(std::size_t at) {
    skip_ws();
    if (pos_ == src_.size() || src_[pos_] != '(') throw ParseError("expected '(' after sqrt", pos_);
    ++pos_;
    skip_ws();
    bool negative = false;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_ws();
    }
    if (pos_ == src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw ParseError("sqrt takes a rational literal", pos_);
    Rational r = rational();
    if (negative) r = -r;
    skip_ws();
    if (pos_ == src_.size() || src_[pos_] != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
    auto root = field_sqrt(Scalar(r), ctx_.field_base);
    if (!root) throw FieldExtensionRequired("sqrt(" + to_string(r) + ") is not in the field");
    return wrap({OperatorExpr::Constant{*root}, at});
  }

  BigInt integer() {
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits += src_[pos_++];
    return BigInt(digits);
  }

  /// integer ('/' integer)?
  Rational rational() {
    BigInt num = integer();
    const std::size_t save = pos_;
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      skip_ws();
      if (pos_ == src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError("expected denominator", pos_);
      const std::size_t den_at = pos_;
      BigInt den = integer();
      if (den == 0) throw ParseError("zero denominator", den_at);
      return make_rational(num, den);
    }
    pos_ = save;
    return Rational(num);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::string_view src_;
  const ParseContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expression(std::string_view src, const ParseContext& ctx = {}) {
  return detail::Parser(src, ctx).parse();
}

inline Op to_diffop(const OperatorExpr& e, const ParseContext& ctx = {}) {
  return std::visit(
      [&](const auto& n) -> Op {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, OperatorExpr::Derivation>) {
          return Op::d();
        } else if constexpr (std::is_same_v<T, OperatorExpr::Variable>) {
          return Op(Poly::x());
        } else if constexpr (std::is_same_v<T, OperatorExpr::Constant>) {
          return Op(Poly(n.value));
        } else if constexpr (std::is_same_v<T, OperatorExpr::Param>) {
          return Op(Poly(ctx.params.at(n.name)));
        } else if constexpr (std::is_same_v<T, OperatorExpr::Neg>) {
          return -to_diffop(*n.operand, ctx);
        } else if constexpr (std::is_same_v<T, OperatorExpr::Binary>) {
          Op l = to_diffop(*n.lhs, ctx), r = to_diffop(*n.rhs, ctx);
          if (n.op == '+') return l + r;
          if (n.op == '-') return l - r;
          return l * r;
        } else {
          return pow(to_diffop(*n.base, ctx), n.exponent);
        }
      },
      e.node);
}

/// Parses straight to a standard-form operator.
inline Op parse_operator(std::string_view src, const ParseContext& ctx = {}) {
  return to_diffop(*parse_expression(src, ctx), ctx);
}

/// Parses an expression that must not involve D.
inline Poly parse_polynomial(std::string_view src, const ParseContext& ctx = {}) {
  Op op = parse_operator(src, ctx);
  if (op.order() > Degree(0)) throw ParseError("expected a polynomial in x (no D)", 0);
  return op.coeff(0);
}

}  // namespace dopfactor::cli
