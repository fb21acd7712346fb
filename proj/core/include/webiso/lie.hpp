#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "webiso/linalg.hpp"

// Finite-dimensional Lie algebras over Q given by structure constants.
// Elements are coordinate vectors in the defining basis; subspaces are
// reduced echelon bases (std::vector<Vector>).
namespace webiso::lie {

using linalg::Matrix;
using linalg::Vector;
using Subspace = std::vector<Vector>;

/// [e_r, e_s] = sum_u lambda(r, s, u) e_u
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t m) : m_(m), data_(m * m * m) {}

  std::size_t dim() const noexcept { return m_; }
  Rational& operator()(std::size_t r, std::size_t s, std::size_t u) { return data_[(r * m_ + s) * m_ + u]; }
  const Rational& operator()(std::size_t r, std::size_t s, std::size_t u) const { return data_[(r * m_ + s) * m_ + u]; }
  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<Rational> data_;
};

Vector bracket(const StructureConstants& sc, const Vector& a, const Vector& b);
/// Matrix of v -> [x, v].
Matrix ad(const StructureConstants& sc, const Vector& x);

/// Description of the first violation, or nullopt.
std::optional<std::string> antisymmetry_violation(const StructureConstants& sc);
std::optional<std::string> jacobi_violation(const StructureConstants& sc);

/// Structure constants in a new basis (rows of `basis`, which must span the algebra
/// or a subalgebra closed under the bracket).
StructureConstants change_basis(const StructureConstants& sc, const std::vector<Vector>& basis);

Subspace whole(std::size_t m);
Subspace span(const std::vector<Vector>& vectors, std::size_t m);
Subspace intersect(const Subspace& a, const Subspace& b, std::size_t m);
/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const StructureConstants& sc, const Subspace& a, const Subspace& b);
/// {w in within : [w, s] = 0 for all s in of}
Subspace centralizer(const StructureConstants& sc, const Subspace& of, const Subspace& within);
Subspace center(const StructureConstants& sc);
/// Elements of `within` annihilated by the linear map given by `images` of the standard basis.
Subspace kernel_within(const std::vector<Vector>& images, const Subspace& within, std::size_t m);

bool contains(const Subspace& s, const Vector& v);

/// Matrix of v -> [y, v] on an ad(y)-invariant subspace, in its coordinates.
Matrix restricted_ad(const StructureConstants& sc, const Vector& y, const Subspace& sub);
/// (F, H, E) with [H,F] = -F, [H,E] = E, [F,E] = 2H inside a 3-dimensional simple ideal.
std::vector<Vector> chevalley_triple(const StructureConstants& sc, const Subspace& ideal);
/// Conjugate triple whose F is (alpha + beta y)^2 in the model
/// F0 = 1, H0 = y, E0 = y^2; alpha and beta coprime.
std::vector<Vector> nilpotent_triple(const std::vector<Vector>& triple, int alpha, int beta);

}  // namespace webiso::lie
