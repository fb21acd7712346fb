#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "webiso/jets.hpp"
#include "webiso/lie.hpp"

namespace webiso {

/// g(t) d/dt, stored as the jet of g at its center.
using LineField = UniJet;

/// g h' - h g', declared at order W - 1.
LineField line_bracket(const LineField& g, const LineField& h);

/// Index of the first nonzero coefficient; nullopt when g is zero to its order.
std::optional<int> line_order(const LineField& g);

/// Coordinate change y(t) with y(center) = center and y' = 1/g, so that g d/dt
/// becomes d/dy. Order W + 1.
UniJet rectify(const LineField& g);

/// The field h d/dt written in the coordinate y = y(t): (y' h) o y^-1.
LineField transform_field(const LineField& h, const UniJet& y);

struct LineReduction {
  int dim = 0;
  /// y(t); absent when every field vanishes at the center (no rectification possible).
  std::optional<UniJet> change;
  /// In the coordinate y, as polynomials in y: {1}, {1, y + c} or {1, y, y^2}.
  std::vector<std::vector<Rational>> normal_basis;
  Rational c;
};

/// Dimension and normal form of a bracket-closed span of line fields.
LineReduction reduce_line_algebra(const std::vector<LineField>& fields);

/// X = sum_i X_i(x_i) d/dx_i; component i is a jet centered at base_i.
struct DiagonalField {
  std::vector<UniJet> components;

  std::size_t n() const { return components.size(); }
  int order() const;
  DiagonalField truncate(int order) const;
  bool is_zero() const;
  /// Component values at the base point.
  std::vector<Rational> at_base() const;
  /// All coefficients, component by component.
  std::vector<Rational> flatten() const;
  friend bool operator==(const DiagonalField&, const DiagonalField&) = default;
};

DiagonalField field_bracket(const DiagonalField& a, const DiagonalField& b);
DiagonalField field_combination(const std::vector<DiagonalField>& fields, const std::vector<Rational>& coeffs);

/// Row j holds the components of the j-th basis field.
using ComponentMatrix = std::vector<DiagonalField>;

struct Block {
  enum class Kind { Sl2, N };
  Kind kind;
  std::vector<std::size_t> columns;     ///< 0-based, block order (first column has c = 0)
  std::vector<Rational> constants;      ///< c_j with rows (1, x_j + c_j[, (x_j + c_j)^2])
  std::vector<linalg::Vector> generators;  ///< F, H, E or F, E in the input basis
};

struct BlockDecomposition {
  std::vector<Block> sl2_blocks;
  std::vector<Block> n_blocks;
  std::vector<linalg::Vector> constant_rows;
  /// Rows: the new basis (block generators, then constant rows) in the input basis.
  linalg::Matrix row_transform;
  /// New column order, 0-based input column indices.
  std::vector<std::size_t> column_permutation;
  /// Columns on which every row vanishes identically.
  std::vector<std::size_t> zero_columns;
  /// Coordinate change y_j(x_j) that puts column j in the block shape.
  std::vector<std::optional<UniJet>> column_changes;
  int check_order = 0;

  std::size_t S() const { return sl2_blocks.size(); }
  std::size_t N() const { return n_blocks.size(); }
  std::size_t C() const { return constant_rows.size(); }
};

/// Constructive reduction of the component matrix to diagonal sl(2) blocks,
/// n blocks and constant rows. Comparisons are made at `check_order`
/// (default: two below the lowest entry order).
BlockDecomposition block_normal_form(const ComponentMatrix& m, const lie::StructureConstants& sc,
                                     std::optional<int> check_order = std::nullopt);

}  // namespace webiso
