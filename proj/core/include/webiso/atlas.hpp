#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "webiso/analysis.hpp"
#include "webiso/expr.hpp"

namespace webiso {

/// An explicit infinitesimal isomorphism: component polynomials in x_i (lowest degree
/// first, an empty list is the zero component) and, when known, phi with X.f = phi(f)
/// as a polynomial in t.
struct GeneratorClaim {
  std::string name;
  std::vector<std::vector<Rational>> components;
  std::optional<std::vector<Rational>> phi;
};

struct Claim {
  std::optional<std::size_t> dim;
  bool parallelizable = false;
  std::optional<std::size_t> S, N, C;
  /// e.g. {"sl2 transverse"} or {"n transverse", "abelian tangent"}; compared as a multiset.
  std::vector<std::string> profile;
  std::vector<GeneratorClaim> generators;
};

enum class Status { Confirmed, Discrepancy, ComputedOnly };
std::string to_string(Status s);

struct AtlasEntry {
  std::string id;
  std::size_t n = 0;
  Expression f = Expression::constant(0);
  Point base;
  int order = 8;
  Claim claimed;
  std::string claim_source;    ///< where the claimed values come from
  std::string representative;  ///< how a generic function was instantiated, if at all
};

/// The built-in catalogue (built once).
const std::vector<AtlasEntry>& atlas_entries();
const AtlasEntry& atlas_entry(const std::string& id);

// ---------------------------------------------------------------------------
// sl(2) constructions

/// Variables x_first, x_second and x_j (j in others) carry F = sum d/dx_i,
/// H = sum (x_i + c_i) d/dx_i, E = sum (x_i + c_i)^2 d/dx_i with c_first = 0, c_second = 1.
/// Indices are 1-based.
struct Sl2Group {
  std::size_t first = 1, second = 2;
  std::vector<std::size_t> others;
  std::vector<Rational> c;  ///< one constant per entry of `others`
};

/// (x_j - x_first - c_j (x_second - x_first)) / (1 + x_second - x_first)
Expression group_theta(const Sl2Group& g, std::size_t k);

/// F, H, E of a group as diagonal fields on n variables, with phi claims
/// (1, t, t^2 for a transverse group, 0 otherwise).
std::vector<GeneratorClaim> group_generators(const Sl2Group& g, std::size_t n, bool transverse);

struct BuiltWeb {
  Expression f;
  std::vector<GeneratorClaim> generators;
};

/// f = x_first + (1 + x_second - x_first) h(...) when `transverse` is set, otherwise
/// f = h(...), with h evaluated at the thetas of the transverse group, then the thetas of
/// each tangent group, then the remaining x's in increasing order. h must satisfy
///   sum_j ((y_j + c_j)^2 - (y_j + c_j)) d h / d y_j = h^2 - h   (transverse group)
///   sum_j ((y_j + c_j)^2 - (y_j + c_j)) d h / d y_j = 0         (each tangent group)
/// to order `order` at the point corresponding to `base`; DomainError names the first
/// failing monomial otherwise. The result must be a valid web at `base`, and the group
/// relations are verified on its jet (ConsistencyAlarm if they fail).
BuiltWeb build_sl2_web(const Expression& h, const std::optional<Sl2Group>& transverse, const std::vector<Sl2Group>& tangent,
                       std::size_t n, const Point& base, int order = 6);

/// One transverse group on x_1..x_p with constants c_3..c_p.
BuiltWeb build_f_l1(const Expression& h, const std::vector<Rational>& c, std::size_t n, std::size_t p, const Point& base,
                    int order = 6);
/// One tangent group on x_1..x_p; requires p > 3.
BuiltWeb build_f_l2(const Expression& h, const std::vector<Rational>& c, std::size_t n, std::size_t p, const Point& base,
                    int order = 6);

// ---------------------------------------------------------------------------
// verification

struct GeneratorCheck {
  std::string name;
  SymmetryCertificate certificate;
  std::optional<UniJet> phi;
  /// Set when the entry claims phi: whether the computed phi agrees to order W - 2.
  std::optional<bool> phi_matches;
};

struct VerificationReport {
  std::string id;
  AnalysisReport analysis;
  std::vector<GeneratorCheck> generators;
  std::size_t dim_lower = 0;  ///< rank of the generators certified exactly
  std::optional<std::size_t> dim_upper;
  bool dim_exact = false;
  Status status = Status::ComputedOnly;
  std::vector<std::string> discrepancies;
};

VerificationReport verify_entry(const AtlasEntry& e, const SolverOptions& opts = {});
VerificationReport verify_entry(const std::string& id, const SolverOptions& opts = {});

}  // namespace webiso
