#pragma once

// Closed-form coefficient expressions in the variable n.
//
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-" factor | power
//   power  := atom ("^" factor)?
//   atom   := number | "n" | ident "(" expr ("," expr)* ")" | "(" expr ")"
//
// Functions: log exp sin cos sqrt abs alt if0. alt(k) = (-1)^k for integer k;
// if0(c, a, b) is a when c evaluates to 0 and b otherwise, and only the
// selected branch is evaluated.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tauberlab/error.hpp"

namespace tauberlab::dsl {

enum class NodeKind { Number, Variable, Add, Sub, Mul, Div, Pow, Neg, Call };
enum class Function { Log, Exp, Sin, Cos, Sqrt, Abs, Alt, If0 };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind = NodeKind::Number;
  double number = 0.0;
  Function function = Function::Log;
  std::vector<NodePtr> args;  // operands for operators, arguments for calls
};

NodePtr make_number(double v);
NodePtr make_variable();
NodePtr make_unary(NodeKind kind, NodePtr operand);
NodePtr make_binary(NodeKind kind, NodePtr lhs, NodePtr rhs);
NodePtr make_call(Function f, std::vector<NodePtr> args);

/// Number of arguments a function takes.
int arity(Function f);
std::string_view function_name(Function f);

class SyntaxError : public ParseError {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public ParseError {
 public:
  UnknownIdentifier(std::size_t offset, const std::string& name);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Immutable parsed expression.
class Expr {
 public:
  Expr() = default;
  explicit Expr(NodePtr root) : root_(std::move(root)) {}

  const NodePtr& root() const noexcept { return root_; }
  bool uses_alt() const;

 private:
  NodePtr root_;
};

Expr parse(std::string_view src);

/// Fully parenthesized rendering that parses back to an equivalent tree.
std::string print(const Expr& e);
std::string print(const NodePtr& node);

/// Evaluates at integer n >= 0. Throws EvaluationError at singularities.
double evaluate(const Expr& e, std::int64_t n);

}  // namespace tauberlab::dsl
