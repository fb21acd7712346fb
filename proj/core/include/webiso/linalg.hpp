#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "webiso/rational.hpp"

// Dense exact linear algebra over Q. Desk-scale sizes only.
namespace webiso::linalg {

using Vector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;                    ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, free variable set to 1.
std::vector<Vector> nullspace(const Matrix& m);

/// Some solution of m x = b (free variables zero), or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Reduced echelon basis of the span of `vectors` (each of length `dim`).
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);

/// Coordinates of v in the (independent) family `basis`, or nullopt if v is outside the span.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v);

bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scaled(const Vector& a, const Rational& s);
/// a + s b
Vector axpy(const Vector& a, const Rational& s, const Vector& b);

/// Incrementally maintained reduced echelon form. Rows may be added one at a
/// time; the column count may grow (new columns are zero in older rows).
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t cols = 0) : cols_(cols) {}
  void grow(std::size_t cols);
  /// Returns true when the row increased the rank.
  bool add_row(Vector row);
  std::size_t rank() const noexcept { return pivot_rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  Matrix reduced() const;
  std::vector<std::size_t> pivots() const;

 private:
  std::size_t cols_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<Vector> pivot_rows_;
};

/// Coefficients c_0..c_d (lowest first) of the characteristic polynomial det(t I - m).
Vector characteristic_polynomial(const Matrix& m);

/// Distinct rational roots of the polynomial (lowest coefficient first).
std::vector<Rational> rational_roots(const Vector& poly);

/// Eigenspaces of m for its rational eigenvalues, sorted by eigenvalue.
std::vector<std::pair<Rational, std::vector<Vector>>> rational_eigenspaces(const Matrix& m);

}  // namespace webiso::linalg
