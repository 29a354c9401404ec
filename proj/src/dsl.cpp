#include "tauberlab/dsl.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

namespace tauberlab::dsl {

namespace {

constexpr std::array<std::pair<std::string_view, Function>, 8> kFunctions{{
    {"log", Function::Log},
    {"exp", Function::Exp},
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"sqrt", Function::Sqrt},
    {"abs", Function::Abs},
    {"alt", Function::Alt},
    {"if0", Function::If0},
}};

std::optional<Function> lookup_function(std::string_view name) {
  for (const auto& [n, f] : kFunctions) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string_view text;
  double number = 0.0;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const noexcept { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    Token t;
    t.offset = pos_;
    if (pos_ >= src_.size()) {
      t.kind = Tok::End;
      current_ = t;
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number(t);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
        ++end;
      t.kind = Tok::Ident;
      t.text = src_.substr(pos_, end - pos_);
      pos_ = end;
    } else {
      switch (c) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case '^': t.kind = Tok::Caret; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ',': t.kind = Tok::Comma; break;
        default:
          throw SyntaxError(pos_, {"number", "'n'", "function", "'('", "'-'"},
                            "'" + std::string(1, c) + "'");
      }
      t.text = src_.substr(pos_, 1);
      ++pos_;
    }
    current_ = t;
  }

  void lex_number(Token& t) {
    std::size_t end = pos_;
    auto digits = [&] {
      std::size_t start = end;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      return end - start;
    };
    std::size_t count = digits();
    if (end < src_.size() && src_[end] == '.') {
      ++end;
      count += digits();
    }
    if (count == 0) throw SyntaxError(pos_, {"digit"}, "'.'");
    if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
      std::size_t save = end;
      ++end;
      if (end < src_.size() && (src_[end] == '+' || src_[end] == '-')) ++end;
      if (digits() == 0) end = save;  // not an exponent; leave 'e' for the next token
    }
    t.kind = Tok::Number;
    t.text = src_.substr(pos_, end - pos_);
    auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + end, t.number);
    if (ec != std::errc() || ptr != src_.data() + end || !std::isfinite(t.number))
      throw SyntaxError(pos_, {"finite number"}, "'" + std::string(t.text) + "'");
    pos_ = end;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    if (lex_.peek().kind != Tok::End)
      throw SyntaxError(lex_.peek().offset, {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"},
                        describe(lex_.peek()));
    return e;
  }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      const NodeKind k = lex_.take().kind == Tok::Plus ? NodeKind::Add : NodeKind::Sub;
      lhs = make_binary(k, lhs, term());
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
      const NodeKind k = lex_.take().kind == Tok::Star ? NodeKind::Mul : NodeKind::Div;
      lhs = make_binary(k, lhs, factor());
    }
    return lhs;
  }

  NodePtr factor() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      return make_unary(NodeKind::Neg, factor());
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      return make_binary(NodeKind::Pow, base, factor());
    }
    return base;
  }

  NodePtr atom() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Tok::Number:
        return make_number(t.number);
      case Tok::LParen: {
        NodePtr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident: {
        if (t.text == "n") return make_variable();
        const auto f = lookup_function(t.text);
        if (!f) throw UnknownIdentifier(t.offset, std::string(t.text));
        expect(Tok::LParen, "'('");
        std::vector<NodePtr> args{expr()};
        while (lex_.peek().kind == Tok::Comma) {
          lex_.take();
          args.push_back(expr());
        }
        const Token close = lex_.peek();
        if (close.kind != Tok::RParen) throw SyntaxError(close.offset, {"','", "')'"}, describe(close));
        lex_.take();
        if (static_cast<int>(args.size()) != arity(*f)) {
          throw SyntaxError(t.offset,
                            {std::to_string(arity(*f)) + " argument(s) to " + std::string(t.text)},
                            std::to_string(args.size()) + " argument(s)");
        }
        return make_call(*f, std::move(args));
      }
      default:
        throw SyntaxError(t.offset, {"number", "'n'", "function", "'('", "'-'"}, describe(t));
    }
  }

  void expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind) throw SyntaxError(lex_.peek().offset, {what}, describe(lex_.peek()));
    lex_.take();
  }

  Lexer lex_;
};

std::string format_number(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void print_into(const NodePtr& node, std::string& out) {
  switch (node->kind) {
    case NodeKind::Number:
      if (std::signbit(node->number)) {
        out += "(-" + format_number(-node->number) + ")";
      } else {
        out += format_number(node->number);
      }
      return;
    case NodeKind::Variable:
      out += 'n';
      return;
    case NodeKind::Neg:
      out += "(-";
      print_into(node->args[0], out);
      out += ')';
      return;
    case NodeKind::Call:
      out += function_name(node->function);
      out += '(';
      for (std::size_t i = 0; i < node->args.size(); ++i) {
        if (i) out += ',';
        print_into(node->args[i], out);
      }
      out += ')';
      return;
    default: {
      static constexpr std::array<char, 5> ops{'+', '-', '*', '/', '^'};
      out += '(';
      print_into(node->args[0], out);
      out += ops[static_cast<int>(node->kind) - static_cast<int>(NodeKind::Add)];
      print_into(node->args[1], out);
      out += ')';
      return;
    }
  }
}

bool contains_alt(const NodePtr& node) {
  if (node->kind == NodeKind::Call && node->function == Function::Alt) return true;
  for (const auto& a : node->args) {
    if (contains_alt(a)) return true;
  }
  return false;
}

class Evaluator {
 public:
  explicit Evaluator(std::int64_t n) : n_(n), x_(static_cast<double>(n)) {}

  double eval(const NodePtr& node) const {
    switch (node->kind) {
      case NodeKind::Number: return node->number;
      case NodeKind::Variable: return x_;
      case NodeKind::Neg: return -eval(node->args[0]);
      case NodeKind::Add: {
        const double a = eval(node->args[0]);
        return checked(node, a + eval(node->args[1]));
      }
      case NodeKind::Sub: {
        const double a = eval(node->args[0]);
        return checked(node, a - eval(node->args[1]));
      }
      case NodeKind::Mul: {
        const double a = eval(node->args[0]);
        return checked(node, a * eval(node->args[1]));
      }
      case NodeKind::Div: {
        const double a = eval(node->args[0]);
        const double b = eval(node->args[1]);
        if (b == 0.0) fail(node, "division by zero");
        return checked(node, a / b);
      }
      case NodeKind::Pow: {
        const double a = eval(node->args[0]);
        const double b = eval(node->args[1]);
        if (a == 0.0 && b < 0.0) fail(node, "zero to a negative power");
        if (a < 0.0 && b != std::trunc(b)) fail(node, "negative base with non-integer exponent");
        return checked(node, std::pow(a, b));
      }
      case NodeKind::Call: return call(node);
    }
    return 0.0;
  }

 private:
  double call(const NodePtr& node) const {
    const auto& args = node->args;
    if (node->function == Function::If0) {
      return eval(args[0]) == 0.0 ? eval(args[1]) : eval(args[2]);
    }
    const double v = eval(args[0]);
    switch (node->function) {
      case Function::Log:
        if (v <= 0.0) fail(node, "log of non-positive value");
        return std::log(v);
      case Function::Exp: return checked(node, std::exp(v));
      case Function::Sin: return std::sin(v);
      case Function::Cos: return std::cos(v);
      case Function::Sqrt:
        if (v < 0.0) fail(node, "sqrt of negative value");
        return std::sqrt(v);
      case Function::Abs: return std::fabs(v);
      case Function::Alt: {
        if (v != std::trunc(v)) fail(node, "alt of non-integer argument");
        return std::fmod(std::fabs(v), 2.0) == 0.0 ? 1.0 : -1.0;
      }
      case Function::If0: break;
    }
    return 0.0;
  }

  double checked(const NodePtr& node, double v) const {
    if (!std::isfinite(v)) fail(node, "non-finite result");
    return v;
  }

  [[noreturn]] void fail(const NodePtr& node, const char* reason) const {
    throw EvaluationError(n_, print(node), reason);
  }

  std::int64_t n_;
  double x_;
};

}  // namespace

NodePtr make_number(double v) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Number;
  node->number = v;
  return node;
}

NodePtr make_variable() {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Variable;
  return node;
}

NodePtr make_unary(NodeKind kind, NodePtr operand) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->args = {std::move(operand)};
  return node;
}

NodePtr make_binary(NodeKind kind, NodePtr lhs, NodePtr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->args = {std::move(lhs), std::move(rhs)};
  return node;
}

NodePtr make_call(Function f, std::vector<NodePtr> args) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Call;
  node->function = f;
  node->args = std::move(args);
  return node;
}

int arity(Function f) { return f == Function::If0 ? 3 : 1; }

std::string_view function_name(Function f) {
  for (const auto& [name, fn] : kFunctions) {
    if (fn == f) return name;
  }
  return "?";
}

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& found)
    : ParseError("syntax error at offset " + std::to_string(offset) + ": expected " +
                 join(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

UnknownIdentifier::UnknownIdentifier(std::size_t offset, const std::string& name)
    : ParseError("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
      offset_(offset) {}

bool Expr::uses_alt() const { return root_ && contains_alt(root_); }

Expr parse(std::string_view src) {
  if (src.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw SyntaxError(0, {"expression"}, "end of input");
  return Expr(Parser(src).parse_all());
}

std::string print(const NodePtr& node) {
  std::string out;
  print_into(node, out);
  return out;
}

std::string print(const Expr& e) { return print(e.root()); }

double evaluate(const Expr& e, std::int64_t n) {
  if (n < 0) throw DomainError("expression evaluated at negative n=" + std::to_string(n));
  return Evaluator(n).eval(e.root());
}

}  // namespace tauberlab::dsl
