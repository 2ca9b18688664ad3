#include "residuum/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace residuum {

namespace {

using Node = CoefficientExpr::Node;
using NodePtr = std::shared_ptr<const Node>;
using Kind = CoefficientExpr::Kind;
using Op = CoefficientExpr::Op;
using Func = CoefficientExpr::Func;
using Var = CoefficientExpr::Var;

NodePtr make_number(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::number;
  n->value = v;
  return n;
}

NodePtr make_binary(Op op, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::binary;
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

struct FuncName {
  std::string_view name;
  Func func;
};
constexpr std::array<FuncName, 5> kFuncs{{{"sin", Func::sin}, {"cos", Func::cos}, {"tan", Func::tan},
                                          {"exp", Func::exp}, {"ln", Func::ln}}};

std::string_view func_name(Func f) {
  for (const auto& fn : kFuncs) {
    if (fn.func == f) return fn.name;
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(Errc::syntax, pos_, what); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      lhs = make_binary(c == '+' ? Op::add : Op::sub, lhs, term());
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      ++pos_;
      lhs = make_binary(c == '*' ? Op::mul : Op::div, lhs, factor());
    }
    return lhs;
  }

  NodePtr factor() {
    NodePtr b = base();
    if (peek() == '^') {
      ++pos_;
      return make_binary(Op::pow, b, factor());
    }
    return b;
  }

  NodePtr base() {
    const char c = peek();
    if (c == '\0') fail("expected expression, found end of input");
    if (c == '-') {
      ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = Kind::negate;
      n->lhs = base();
      return n;
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail("malformed exponent");
    }
    double v = 0.0;
    const auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (res.ec != std::errc{} || res.ptr != src_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return make_number(v);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "t" || name == "x" || name == "y") {
      auto n = std::make_shared<Node>();
      n->kind = Kind::variable;
      n->var = name == "t" ? Var::t : name == "x" ? Var::x : Var::y;
      return n;
    }
    for (const auto& fn : kFuncs) {
      if (fn.name != name) continue;
      if (peek() != '(') fail("expected '(' after " + std::string(name));
      ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = Kind::call;
      n->func = fn.func;
      n->lhs = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return n;
    }
    throw ParseError(Errc::unknown_identifier, start, "unknown identifier '" + std::string(name) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

[[noreturn]] void domain_error(const std::string& what) { throw Error(Errc::domain, what); }

double eval(const Node& n, const CoefficientExpr::Bindings& at) {
  switch (n.kind) {
    case Kind::number: return n.value;
    case Kind::variable: return n.var == Var::t ? at.t : n.var == Var::x ? at.x : at.y;
    case Kind::negate: return -eval(*n.lhs, at);
    case Kind::call: {
      const double v = eval(*n.lhs, at);
      switch (n.func) {
        case Func::sin: return std::sin(v);
        case Func::cos: return std::cos(v);
        case Func::tan:
          if (std::fabs(std::cos(v)) < 1e-12) domain_error("tan evaluated at a pole");
          return std::tan(v);
        case Func::exp: return std::exp(v);
        case Func::ln:
          if (v <= 0.0) domain_error("ln of a non-positive value");
          return std::log(v);
      }
      break;
    }
    case Kind::binary: {
      const double a = eval(*n.lhs, at);
      const double b = eval(*n.rhs, at);
      switch (n.op) {
        case Op::add: return a + b;
        case Op::sub: return a - b;
        case Op::mul: return a * b;
        case Op::div:
          if (b == 0.0) domain_error("division by zero");
          return a / b;
        case Op::pow: return std::pow(a, b);
      }
      break;
    }
  }
  return 0.0;
}

// Precedence levels: 1 additive, 2 multiplicative, 3 power, 4 base.
int level(const Node& n) {
  if (n.kind == Kind::number && std::signbit(n.value)) return 4;
  if (n.kind != Kind::binary) return 4;
  switch (n.op) {
    case Op::add:
    case Op::sub: return 1;
    case Op::mul:
    case Op::div: return 2;
    case Op::pow: return 3;
  }
  return 4;
}

void print(const Node& n, int required, std::string& out);

void print_number(double v, std::string& out) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), res.ptr);
}

void print(const Node& n, int required, std::string& out) {
  const bool wrap = level(n) < required;
  if (wrap) out += '(';
  switch (n.kind) {
    case Kind::number:
      if (std::signbit(n.value)) {
        out += '-';
        print_number(-n.value, out);
      } else {
        print_number(n.value, out);
      }
      break;
    case Kind::variable: out += n.var == Var::t ? "t" : n.var == Var::x ? "x" : "y"; break;
    case Kind::negate:
      out += '-';
      print(*n.lhs, 4, out);
      break;
    case Kind::call:
      out += func_name(n.func);
      out += '(';
      print(*n.lhs, 1, out);
      out += ')';
      break;
    case Kind::binary:
      switch (n.op) {
        case Op::add:
        case Op::sub:
          print(*n.lhs, 1, out);
          out += n.op == Op::add ? " + " : " - ";
          print(*n.rhs, 2, out);
          break;
        case Op::mul:
        case Op::div:
          print(*n.lhs, 2, out);
          out += n.op == Op::mul ? " * " : " / ";
          print(*n.rhs, 3, out);
          break;
        case Op::pow:
          print(*n.lhs, 4, out);
          out += '^';
          print(*n.rhs, 3, out);
          break;
      }
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

CoefficientExpr CoefficientExpr::constant(double v) { return CoefficientExpr(make_number(v)); }

double CoefficientExpr::evaluate(const Bindings& at) const {
  const double v = eval(*root_, at);
  if (!std::isfinite(v)) domain_error("expression " + str() + " is not finite at the requested point");
  return v;
}

std::string CoefficientExpr::str() const {
  std::string out;
  print(*root_, 1, out);
  return out;
}

CoefficientExpr parse_coefficient(std::string_view src) { return CoefficientExpr(Parser(src).parse()); }

}  // namespace residuum
