#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bjorling/series.hpp"

namespace bjorling {

/// Named reals and named jets visible to an expression.
struct ExprScope {
  std::map<std::string, double> params;
  /// Jets in u, usable as f(u) in jet mode and f(t) for any real t in value mode.
  std::map<std::string, USeries> series;
};

/// Generator expression: numbers, parameters, the variables u, v, x1, x2,
/// x3, the operators + - * / ^ and the functions exp, log, sin, cos, sinh,
/// cosh, sqrt. Powers take a constant exponent.
class Expr {
 public:
  struct Node;

  /// Throws Error(Parse) with the offending column on malformed input.
  static Expr parse(std::string_view text);

  const std::string& text() const { return text_; }

  /// Value with the listed variables bound.
  double value(const ExprScope& scope, const std::map<std::string, double>& vars = {}) const;
  /// Taylor jet in u about center. Names in bound stand for the given jets;
  /// any other variable is an error.
  USeries jet(const ExprScope& scope, double center, int degree,
              const std::map<std::string, USeries>& bound = {}) const;

  /// Free identifiers that are neither parameters nor series in scope.
  std::vector<std::string> free_variables(const ExprScope& scope) const;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace bjorling
