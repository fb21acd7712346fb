#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "webiso/expr.hpp"
#include "webiso/jets.hpp"
#include "webiso/lie.hpp"
#include "webiso/linefields.hpp"

namespace webiso {

/// The (n+1)-web (x1, ..., xn, f) near a rational base point.
class WebSpec {
 public:
  WebSpec(std::size_t n, Expression f, Point base, int order = 8);

  std::size_t n() const noexcept { return n_; }
  const Expression& f() const noexcept { return f_; }
  const Point& base() const noexcept { return base_; }
  int order() const noexcept { return order_; }
  WebSpec with_order(int order) const;

  /// Jet of f at the base point (cached; the highest order computed so far is truncated).
  MultiJet jet(int order) const;

 private:
  struct Cache;
  std::size_t n_;
  Expression f_;
  Point base_;
  int order_;
  std::shared_ptr<Cache> cache_;
};

struct ValidationReport {
  bool valid = false;
  Rational value;                    ///< f(base)
  std::vector<Rational> partials;    ///< df/dx_i at base
  std::vector<std::size_t> vanishing;  ///< 1-based indices of vanishing partials
  std::string message;
};

ValidationReport validate_web(const WebSpec& w);
/// Throws InvalidWebError with the report's message when the web is invalid.
ValidationReport require_valid(const WebSpec& w);

/// A field with the given component polynomials (coefficients in x_i, lowest first).
DiagonalField field_from_polynomials(const std::vector<std::vector<Rational>>& polys, const Point& base, int order);
/// Component polynomials in x_i (not x_i - base_i).
std::vector<std::vector<Rational>> field_to_polynomials(const DiagonalField& x);
/// Pads or truncates every component to `order` (components are read as polynomials).
DiagonalField field_at_order(const DiagonalField& x, int order);

/// sum_i X_i d a / d x_i, declared at order W - 1. Components are read as polynomials.
MultiJet apply_field(const DiagonalField& x, const MultiJet& a);

struct SymmetryCertificate {
  bool holds = false;
  int checked_order = 0;
  /// The checked order reaches the residual degree bound, so `holds` is an identity.
  bool exact = false;
  std::optional<int> exact_bound;
  /// First nonzero residual coefficient, when !holds.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  Exponents failing_monomial;
  Rational failing_coefficient;
};

struct SymmetryCheckOptions {
  /// Raise the checked order to the degree bound when f is rational times exp(affine).
  bool upgrade_to_exact = true;
  std::optional<int> order;  ///< default: W - 2
  /// The upgrade is skipped when the jet of f it needs would exceed this many monomials.
  std::size_t max_upgrade_monomials = 50000;
};

/// Tests d(Xf) ^ df = 0 pairwise, i.e. Xf = phi(f) near the base point.
SymmetryCertificate is_symmetry(const DiagonalField& x, const WebSpec& w, const SymmetryCheckOptions& opts = {});

/// phi with Xf = phi o f, centered at f(base), order W - 1. Verified to order W - 2.
UniJet induced_phi(const DiagonalField& x, const WebSpec& w);

struct SymmetrySolution {
  std::vector<DiagonalField> basis;
  /// (truncation order T, solution dimension) for T = 3 .. W - 2.
  std::vector<std::pair<int, int>> dims_by_order;
  bool stabilized = false;
  int order = 0;          ///< W
  int degree_cap = 0;     ///< D
  bool closed = false;    ///< bracket closure of the basis
  int closure_order = 0;
  std::string closure_failure;

  std::size_t dim() const { return basis.size(); }
};

struct SolverOptions {
  std::optional<int> degree_cap;  ///< default W - 1
  int stabilization_window = 3;
};

SymmetrySolution solve_symmetries(const WebSpec& w, const SolverOptions& opts = {});

/// Rank of the matrix of component values at the base point.
std::size_t orbit_rank(const std::vector<DiagonalField>& basis);
/// Basis combinations vanishing at the base point (kernel of the evaluation map).
std::vector<linalg::Vector> vanishing_combinations(const std::vector<DiagonalField>& basis);

}  // namespace webiso
