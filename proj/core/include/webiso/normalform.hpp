#pragma once

#include <optional>
#include <string>
#include <vector>

#include "webiso/jets.hpp"
#include "webiso/symmetry.hpp"

namespace webiso {

/// f written as theta(f(g_1(t_1), ..., g_n(t_n))) = t_1 + ... + t_n + sum_{i<j} t_i t_j a_ij(t).
struct NormalFormResult {
  MultiJet nf;
  /// g_i: t_i -> x_i, centered at 0 with value base_i.
  std::vector<UniJet> g;
  /// theta: centered at f(base), value 0.
  UniJet theta;
  /// a_quadratic[i][j] = a_ij(0) for i < j (0-based), zero elsewhere.
  std::vector<std::vector<Rational>> a_quadratic;
  /// Largest k <= W with no nonlinear coefficient of degree <= k.
  int linear_to_order = 0;
  int order = 0;
};

NormalFormResult compute_normal_form(const WebSpec& w);

/// Re-checks the normal-form invariants and theta o f o g = nf; returns the first violation.
std::optional<std::string> normal_form_violation(const NormalFormResult& r, const WebSpec& w);

struct HomothetyReport {
  Rational lambda;
  bool holds = false;
  int order = 0;
  std::string detail;
};

/// Normal form of f(base + lambda (x - base)) / lambda against nf with degree-k
/// coefficients multiplied by lambda^(k-1).
HomothetyReport homothety_uniqueness_check(const WebSpec& w, const Rational& lambda);

enum class Verdict { Parallelizable, NotParallelizable, Inconsistent };
std::string to_string(Verdict v);

struct ParallelizabilityReport {
  bool symmetry_branch = false;      ///< some symmetry vanishes at the base point
  std::size_t vanishing_dim = 0;
  bool symmetry_stabilized = false;
  bool normal_form_branch = false;   ///< normal form linear to order W
  int linear_to_order = 0;
  int order = 0;
  Verdict verdict = Verdict::Inconsistent;
};

ParallelizabilityReport parallelizability_test(const WebSpec& w, const SymmetrySolution& sol, const NormalFormResult& nf);
ParallelizabilityReport parallelizability_test(const WebSpec& w);

}  // namespace webiso
