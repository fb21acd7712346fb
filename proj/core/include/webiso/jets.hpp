#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "webiso/rational.hpp"

namespace webiso {

/// Exponent vector of a monomial in the shifted variables (x - base).
using Exponents = std::vector<int>;

/// Enumeration of all monomials in n variables of total degree <= order, in
/// graded-lexicographic order: total degree ascending, then exponent vectors
/// lexicographically descending (x1^d before x1^(d-1) x2 ...).
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, int order);

  std::size_t n() const noexcept { return n_; }
  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return degree_.size(); }
  /// Number of monomials of total degree <= d.
  std::size_t count_upto(int d) const;
  std::span<const int> exponents(std::size_t index) const {
    return {exps_.data() + index * n_, n_};
  }
  int degree(std::size_t index) const { return degree_[index]; }
  /// Rank of an exponent vector; the degree must not exceed order().
  std::size_t index(std::span<const int> e) const;
  /// Rank of a + b without materializing the sum.
  std::size_t index_of_sum(std::size_t a, std::size_t b) const;

 private:
  std::size_t binom(int a, int b) const;

  std::size_t n_;
  int order_;
  std::vector<int> exps_;
  std::vector<int> degree_;
  std::vector<std::size_t> binom_;  // (order + n + 1)^2 Pascal table
  int binom_width_;
};

using BasisPtr = std::shared_ptr<const MonomialBasis>;
BasisPtr make_basis(std::size_t n, int order);

/// Truncated Taylor expansion at a rational base point, in the shifted
/// variables s_i = x_i - base_i, with exact coefficients up to total degree W.
class MultiJet {
 public:
  MultiJet(BasisPtr basis, Point base);
  MultiJet(BasisPtr basis, Point base, std::vector<Rational> coeffs);

  static MultiJet constant(BasisPtr basis, Point base, const Rational& c);
  /// The jet of the coordinate function x_i (1-based): base_i + s_i.
  static MultiJet coordinate(BasisPtr basis, Point base, std::size_t i);

  std::size_t n() const noexcept { return basis_->n(); }
  int order() const noexcept { return basis_->order(); }
  const Point& base() const noexcept { return base_; }
  const BasisPtr& basis() const noexcept { return basis_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  const Rational& coeff(std::size_t index) const { return coeffs_[index]; }
  Rational coeff(const Exponents& e) const;
  const Rational& constant_term() const { return coeffs_[0]; }

  /// Nonzero terms in graded-lex order.
  std::vector<std::pair<Exponents, Rational>> terms() const;

  bool is_zero() const;
  /// Index of the first nonzero coefficient of degree <= d, if any.
  std::optional<std::size_t> first_nonzero_upto(int d) const;
  /// Lowers the declared order; raising is an error.
  MultiJet truncate(int order) const;
  MultiJet truncate(const BasisPtr& lower) const;
  bool compatible(const MultiJet& other) const;

  /// One monomial per line: "coeff  e1 e2 ... en", graded-lex order.
  std::string dump() const;

  friend bool operator==(const MultiJet& a, const MultiJet& b);

 private:
  BasisPtr basis_;
  Point base_;
  std::vector<Rational> coeffs_;
};

MultiJet operator+(const MultiJet& a, const MultiJet& b);
MultiJet operator-(const MultiJet& a, const MultiJet& b);
MultiJet operator-(const MultiJet& a);
MultiJet operator*(const MultiJet& a, const MultiJet& b);
MultiJet operator*(const Rational& s, const MultiJet& a);
MultiJet jet_add(const MultiJet& a, const MultiJet& b);
MultiJet jet_mul(const MultiJet& a, const MultiJet& b);
MultiJet jet_scale(const MultiJet& a, const Rational& s);
/// Multiplicative inverse; the constant term must be nonzero.
MultiJet reciprocal(const MultiJet& a);
/// Integer power by repeated squaring; negative exponents need a unit jet.
MultiJet power(const MultiJet& a, long exponent);
/// Formal partial derivative in x_i (1-based); declared order drops by one.
MultiJet jet_partial(const MultiJet& a, std::size_t i);
/// Multiplies by (x_i - base_i)^k and truncates.
MultiJet shift_multiply(const MultiJet& a, std::size_t i, int k);

/// One-variable truncated series sum_k c_k (t - center)^k, k = 0..W.
class UniJet {
 public:
  UniJet(Rational center, std::vector<Rational> coeffs);
  static UniJet constant(Rational center, int order, const Rational& c);
  /// The identity t, as a jet at `center`.
  static UniJet identity(Rational center, int order);
  /// Taylor expansion at `center` of the polynomial sum_k p_k t^k.
  static UniJet from_polynomial(Rational center, int order, const std::vector<Rational>& poly);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& center() const noexcept { return center_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  const Rational& value() const { return coeffs_[0]; }

  UniJet truncate(int order) const;
  bool is_zero() const;
  /// Degree of the highest nonzero coefficient, or -1 for the zero jet.
  int degree() const;
  /// Index of the first nonzero coefficient, if any.
  std::optional<int> valuation() const;
  /// Coefficients of the same function as a polynomial in t (not t - center).
  std::vector<Rational> to_polynomial() const;
  std::string dump() const;

  friend bool operator==(const UniJet& a, const UniJet& b) = default;

 private:
  Rational center_;
  std::vector<Rational> coeffs_;
};

UniJet operator+(const UniJet& a, const UniJet& b);
UniJet operator-(const UniJet& a, const UniJet& b);
UniJet operator*(const UniJet& a, const UniJet& b);
UniJet operator*(const Rational& s, const UniJet& a);
UniJet uni_derivative(const UniJet& a);
/// Antiderivative with value `at_center` at the center; order rises by one.
UniJet uni_integral(const UniJet& a, const Rational& at_center);
UniJet uni_reciprocal(const UniJet& a);
/// outer(inner(t)); outer.center must equal inner's value at its center.
UniJet uni_compose(const UniJet& outer, const UniJet& inner);
/// Compositional inverse: h(g(t)) = t, centered at g's value. Linear coefficient must be nonzero.
UniJet uni_reversion(const UniJet& g);

/// theta(a(x)); theta.center must equal a's constant term.
MultiJet uni_compose(const UniJet& theta, const MultiJet& a);
/// a(g_1(t_1), ..., g_n(t_n)) at the new base (g_i centers); g_i's value must be a's base_i.
MultiJet substitute_diagonal(const MultiJet& a, const std::vector<UniJet>& g);
/// u(x_i) as an n-variable jet.
MultiJet embed(const UniJet& u, std::size_t i, const BasisPtr& basis, const Point& base);
/// Restriction of a to the line base + t e_i.
UniJet restrict_to_axis(const MultiJet& a, std::size_t i);

/// Standard one-variable series at the given center, order W.
namespace series {
UniJet exp_at_zero(int order);            ///< exp(s) about s = 0
UniJet log1p_at_zero(int order);          ///< ln(1 + s) about s = 0
UniJet expm1_at_zero(int order);          ///< e^s - 1 about s = 0
}  // namespace series

}  // namespace webiso
