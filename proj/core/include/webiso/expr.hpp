#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "webiso/jets.hpp"
#include "webiso/rational.hpp"

namespace webiso {

enum class Op { Var, Const, Add, Sub, Neg, Mul, Div, Pow, Exp };

struct ExprNode;

/// Immutable expression tree for a first integral f(x1, ..., xn).
/// Copies share structure.
class Expression {
 public:
  static Expression var(std::size_t i);
  static Expression constant(const Rational& q);
  static Expression unary(Op op, Expression a);
  static Expression binary(Op op, Expression a, Expression b);
  static Expression pow(Expression a, long exponent);
  static Expression exp(Expression a);

  Op op() const;
  std::size_t var_index() const;        ///< Var only, 1-based
  const Rational& value() const;        ///< Const only
  long exponent() const;                ///< Pow only
  const std::vector<Expression>& args() const;

  std::size_t node_count() const;
  std::size_t depth() const;
  /// Largest variable index in the tree (0 for constants).
  std::size_t max_variable() const;
  /// Identity of the shared node (for memoization).
  const void* id() const;

 private:
  explicit Expression(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

Expression operator+(const Expression& a, const Expression& b);
Expression operator-(const Expression& a, const Expression& b);
Expression operator-(const Expression& a);
Expression operator*(const Expression& a, const Expression& b);
Expression operator/(const Expression& a, const Expression& b);

struct ExprLimits {
  std::size_t max_nodes = 10000;
  std::size_t max_coefficient_bits = 65536;
};

/// Parses the text grammar of docs/grammar.md. Variable indices must lie in [1, n].
Expression parse_expression(std::string_view text, std::size_t n, const ExprLimits& limits = {});

/// Re-parseable text with minimal parentheses.
std::string to_text(const Expression& e);

nlohmann::json to_json(const Expression& e);
/// Accepts either a JSON tree or a string in the text grammar.
Expression expression_from_json(const nlohmann::json& j, std::size_t n, const ExprLimits& limits = {});

/// Exact value at a rational point. exp is only defined where its argument is 0.
Rational evaluate(const Expression& e, const Point& x);

/// Replaces x_i by replacements[i-1].
Expression substitute(const Expression& e, const std::vector<Expression>& replacements);

/// Order-W Taylor expansion at `base`. Every exp argument must vanish at base.
MultiJet expand_to_jet(const Expression& e, const Point& base, int order, const ExprLimits& limits = {});
MultiJet expand_to_jet(const Expression& e, const BasisPtr& basis, const Point& base, const ExprLimits& limits = {});

/// Shape of f as (P/Q) * exp(L) with P, Q polynomials and L affine.
struct RationalExpForm {
  int numerator_degree = 0;
  int denominator_degree = 0;
  std::vector<Rational> exponent;  ///< affine L: constant term then x1..xn coefficients
  bool has_exp() const;
};

/// nullopt when f is not of that shape (e.g. exp of a non-affine argument, or
/// sums with different exponential factors).
std::optional<RationalExpForm> rational_exp_form(const Expression& e, std::size_t n);

/// Order above which a vanishing jet of the pairwise residual of a diagonal field
/// with polynomial components of degree <= field_degree is an exact identity.
int residual_degree_bound(const RationalExpForm& form, int field_degree);

}  // namespace webiso
