#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "webiso/lie.hpp"
#include "webiso/linefields.hpp"
#include "webiso/symmetry.hpp"

namespace webiso {

/// Structure constants of a bracket-closed basis of diagonal fields, compared at
/// `order` (default: two below the component order). Verifies antisymmetry and Jacobi.
lie::StructureConstants structure_constants(const std::vector<DiagonalField>& basis, std::optional<int> order = std::nullopt);

struct Factor {
  enum class Type { Sl2, N, Abelian };
  Type type;
  /// sl2: F, H, E with [F,H] = F, [H,E] = E, [F,E] = 2H.  n: F, E with [F,E] = F.
  /// abelian: a basis of the center. Coordinates in the input basis.
  std::vector<linalg::Vector> generators;
  /// "transverse" or "tangent" once profiled; empty before.
  std::string action;
  /// phi of each generator (X.f = phi(f)), once profiled.
  std::vector<UniJet> phis;
};

std::string to_string(Factor::Type t);

struct FactorDecomposition {
  std::size_t m = 0, S = 0, N = 0, C = 0;
  std::vector<Factor> factors;
  /// Rows: all generators in factor order.
  linalg::Matrix transform;
};

/// Splits the algebra into sl(2), n and abelian factors using the center and the derived series.
/// Throws ConsistencyAlarm when the algebra is not such a product.
FactorDecomposition decompose_factors(const lie::StructureConstants& sc);

/// Structure constants of sl(2)^S x n^N x Q^C in the generator order used by decompose_factors.
lie::StructureConstants model_algebra(std::size_t S, std::size_t N, std::size_t C);

struct BoundCheck {
  std::string name;
  std::string instance;  ///< the inequality with numbers substituted
  bool applies = false;
  bool enforced = false;
  bool holds = false;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool passed = true;  ///< every enforced check holds
};

BoundReport check_theorem_bound(const FactorDecomposition& d, std::size_t n, bool parallelizable);

/// Fills in phis and action for every factor. Throws ConsistencyAlarm if two sl(2) factors are transverse.
FactorDecomposition factor_action_profile(FactorDecomposition d, const SymmetrySolution& sol, const WebSpec& w);

struct RouteComparison {
  std::size_t S_invariant = 0, N_invariant = 0, C_invariant = 0;
  std::size_t S_blocks = 0, N_blocks = 0, C_blocks = 0;
  bool agree = false;
};

RouteComparison compare_routes(const FactorDecomposition& d, const BlockDecomposition& b);

}  // namespace webiso
