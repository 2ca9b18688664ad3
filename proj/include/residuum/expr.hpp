#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "residuum/error.hpp"

namespace residuum {

/// Coefficient functions b(t), c(t), f(x, y) as an immutable expression tree.
///
/// Grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := base ("^" factor)?
///   base   := NUMBER | VAR | FUNC "(" expr ")" | "(" expr ")" | "-" base
///   FUNC   := sin | cos | tan | exp | ln      VAR := t | x | y
class CoefficientExpr {
 public:
  enum class Kind { number, variable, negate, binary, call };
  enum class Var { t, x, y };
  enum class Op { add, sub, mul, div, pow };
  enum class Func { sin, cos, tan, exp, ln };

  struct Node {
    Kind kind = Kind::number;
    double value = 0.0;
    Var var = Var::t;
    Op op = Op::add;
    Func func = Func::sin;
    std::shared_ptr<const Node> lhs;  // operand for negate and call
    std::shared_ptr<const Node> rhs;
  };

  struct Bindings {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
  };

  static CoefficientExpr constant(double v);

  const Node& root() const noexcept { return *root_; }

  /// Throws Errc::domain for tan at a pole, ln of a non-positive value,
  /// division by zero and any non-finite result.
  double evaluate(const Bindings& at) const;
  double operator()(double t) const { return evaluate({t, 0.0, 0.0}); }

  /// Canonical text: minimal parentheses, shortest round-trip numbers.
  std::string str() const;

  bool is_constant() const noexcept { return root_->kind == Kind::number; }

 private:
  explicit CoefficientExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  friend CoefficientExpr parse_coefficient(std::string_view src);

  std::shared_ptr<const Node> root_;
};

/// Throws ParseError (Errc::syntax or Errc::unknown_identifier) with the
/// byte offset of the offending token.
CoefficientExpr parse_coefficient(std::string_view src);

}  // namespace residuum
