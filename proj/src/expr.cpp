#include "bjorling/expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

#include "bjorling/error.hpp"

namespace bjorling {

struct Expr::Node {
  enum class Kind { Number, Name, Neg, Add, Sub, Mul, Div, Pow, Call };
  Kind kind = Kind::Number;
  double number = 0.0;
  std::string name;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Node::Kind;

const std::set<std::string, std::less<>> kFunctions{"exp", "log", "sin", "cos", "sinh", "cosh", "sqrt"};

NodePtr make(Kind k, std::vector<NodePtr> args = {}, std::string name = {}, double number = 0.0) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  n->args = std::move(args);
  n->name = std::move(name);
  n->number = number;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = sum();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, "expression '" + std::string(s_) + "', column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr sum() {
    NodePtr lhs = product();
    for (;;) {
      if (eat('+')) lhs = make(Kind::Add, {lhs, product()});
      else if (eat('-')) lhs = make(Kind::Sub, {lhs, product()});
      else return lhs;
    }
  }

  NodePtr product() {
    NodePtr lhs = unary();
    for (;;) {
      if (eat('*')) lhs = make(Kind::Mul, {lhs, unary()});
      else if (eat('/')) lhs = make(Kind::Div, {lhs, unary()});
      else return lhs;
    }
  }

  NodePtr unary() {
    if (eat('-')) return make(Kind::Neg, {unary()});
    if (eat('+')) return unary();
    return power();
  }

  // Right associative; binds tighter than unary minus so -u^2 = -(u^2).
  NodePtr power() {
    NodePtr base = atom();
    if (eat('^')) return make(Kind::Pow, {base, unary()});
    return base;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (eat('(')) {
      NodePtr n = sum();
      if (!eat(')')) error("expected ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (eat('(')) {
        NodePtr arg = sum();
        if (!eat(')')) error("expected ')' after argument of " + name);
        return make(Kind::Call, {arg}, name);
      }
      return make(Kind::Name, {}, name);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::string rest(s_.substr(pos_));
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(rest, &used);
    } catch (const std::exception&) {
      error("malformed number");
    }
    pos_ += used;
    return make(Kind::Number, {}, {}, x);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

double call_function(const std::string& f, double x) {
  if (f == "exp") return std::exp(x);
  if (f == "log") {
    if (!(x > 0.0)) fail(ErrorCode::DomainError, "log of a non-positive value");
    return std::log(x);
  }
  if (f == "sin") return std::sin(x);
  if (f == "cos") return std::cos(x);
  if (f == "sinh") return std::sinh(x);
  if (f == "cosh") return std::cosh(x);
  if (!(x >= 0.0)) fail(ErrorCode::DomainError, "sqrt of a negative value");
  return std::sqrt(x);
}

USeries call_function(const std::string& f, const USeries& x) {
  if (f == "exp") return exp(x);
  if (f == "log") return log(x);
  if (f == "sin") return sin(x);
  if (f == "cos") return cos(x);
  if (f == "sinh") return sinh(x);
  if (f == "cosh") return cosh(x);
  return sqrt(x);
}

double lookup(const std::string& name, const ExprScope& scope, const std::map<std::string, double>& vars) {
  if (auto it = vars.find(name); it != vars.end()) return it->second;
  if (auto it = scope.params.find(name); it != scope.params.end()) return it->second;
  if (name == "pi") return std::numbers::pi;
  fail(ErrorCode::Parse, "unknown name '" + name + "'");
}

bool is_constant_name(const std::string& name, const ExprScope& scope) {
  return scope.params.count(name) != 0 || name == "pi";
}

double value_of(const NodePtr& n, const ExprScope& scope, const std::map<std::string, double>& vars) {
  auto arg = [&](std::size_t i) { return value_of(n->args[i], scope, vars); };
  switch (n->kind) {
    case Kind::Number: return n->number;
    case Kind::Name: return lookup(n->name, scope, vars);
    case Kind::Neg: return -arg(0);
    case Kind::Add: return arg(0) + arg(1);
    case Kind::Sub: return arg(0) - arg(1);
    case Kind::Mul: return arg(0) * arg(1);
    case Kind::Div: {
      const double d = arg(1);
      if (d == 0.0) fail(ErrorCode::DomainError, "division by zero");
      return arg(0) / d;
    }
    case Kind::Pow: return std::pow(arg(0), arg(1));
    case Kind::Call: {
      if (auto it = scope.series.find(n->name); it != scope.series.end()) return it->second.eval(arg(0));
      if (kFunctions.count(n->name) == 0) fail(ErrorCode::Parse, "unknown function '" + n->name + "'");
      return call_function(n->name, arg(0));
    }
  }
  return 0.0;
}

bool depends_on_variables(const NodePtr& n, const ExprScope& scope) {
  if (n->kind == Kind::Name && !is_constant_name(n->name, scope)) return true;
  for (const auto& a : n->args)
    if (depends_on_variables(a, scope)) return true;
  return false;
}

USeries jet_of(const NodePtr& n, const ExprScope& scope, double center, int degree,
               const std::map<std::string, USeries>& bound) {
  auto arg = [&](std::size_t i) { return jet_of(n->args[i], scope, center, degree, bound); };
  auto constant = [&](double x) { return USeries::constant(center, degree, x); };
  switch (n->kind) {
    case Kind::Number: return constant(n->number);
    case Kind::Name:
      if (auto it = bound.find(n->name); it != bound.end()) return it->second.resized(degree);
      if (n->name == "u") return USeries::variable(center, degree);
      if (!is_constant_name(n->name, scope)) {
        fail(ErrorCode::Parse, "'" + n->name + "' is not available in a curve expression (only u and parameters)");
      }
      return constant(lookup(n->name, scope, {}));
    case Kind::Neg: return -arg(0);
    case Kind::Add: return arg(0) + arg(1);
    case Kind::Sub: return arg(0) - arg(1);
    case Kind::Mul: return arg(0) * arg(1);
    case Kind::Div: return arg(0) * reciprocal(arg(1));
    case Kind::Pow: {
      if (depends_on_variables(n->args[1], scope)) fail(ErrorCode::Parse, "exponents must be constant");
      return pow(arg(0), value_of(n->args[1], scope, {}));
    }
    case Kind::Call: {
      if (auto it = scope.series.find(n->name); it != scope.series.end()) {
        const NodePtr& a = n->args[0];
        if (!depends_on_variables(a, scope)) return constant(it->second.eval(value_of(a, scope, {})));
        if (!(a->kind == Kind::Name && a->name == "u")) {
          fail(ErrorCode::Parse, "series '" + n->name + "' can only be applied to u in a curve expression");
        }
        if (it->second.center() != center) {
          fail(ErrorCode::Parse, "series '" + n->name + "' has a different center than the curve");
        }
        if (it->second.degree() < degree) {
          fail(ErrorCode::Parse, "series '" + n->name + "' has degree " + std::to_string(it->second.degree()) +
                                     ", need " + std::to_string(degree));
        }
        return it->second.resized(degree);
      }
      if (kFunctions.count(n->name) == 0) fail(ErrorCode::Parse, "unknown function '" + n->name + "'");
      return call_function(n->name, arg(0));
    }
  }
  return constant(0.0);
}

void collect_free(const NodePtr& n, const ExprScope& scope, std::set<std::string>& out) {
  if (n->kind == Kind::Name && !is_constant_name(n->name, scope)) out.insert(n->name);
  for (const auto& a : n->args) collect_free(a, scope, out);
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.text_ = std::string(text);
  e.root_ = Parser(e.text_).parse();
  return e;
}

double Expr::value(const ExprScope& scope, const std::map<std::string, double>& vars) const {
  return value_of(root_, scope, vars);
}

USeries Expr::jet(const ExprScope& scope, double center, int degree,
                  const std::map<std::string, USeries>& bound) const {
  return jet_of(root_, scope, center, degree, bound);
}

std::vector<std::string> Expr::free_variables(const ExprScope& scope) const {
  std::set<std::string> out;
  collect_free(root_, scope, out);
  return {out.begin(), out.end()};
}

}  // namespace bjorling
