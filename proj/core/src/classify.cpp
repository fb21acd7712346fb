#include "webiso/classify.hpp"

#include <algorithm>

#include "webiso/error.hpp"

namespace webiso {

using linalg::Matrix;
using linalg::Vector;

lie::StructureConstants structure_constants(const std::vector<DiagonalField>& basis, std::optional<int> order) {
  const std::size_t m = basis.size();
  lie::StructureConstants sc(m);
  if (m == 0) return sc;
  int lowest = basis.front().order();
  for (const auto& x : basis) lowest = std::min(lowest, x.order());
  const int k = order.value_or(lowest - 2);
  if (k < 0 || k > lowest - 1) throw ShapeError("structure_constants: comparison order out of range");
  std::vector<Vector> flat;
  for (const auto& x : basis) flat.push_back(x.truncate(k).flatten());
  if (linalg::rank(Matrix::from_rows(flat, flat.front().size())) != m)
    throw Error("basis fields are linearly dependent at order " + std::to_string(k));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) {
      if (r == s) continue;
      auto c = linalg::coordinates(flat, field_bracket(basis[r], basis[s]).truncate(k).flatten());
      if (!c)
        throw Error("bracket [X" + std::to_string(r + 1) + ", X" + std::to_string(s + 1) +
                    "] is not in the span of the basis at order " + std::to_string(k));
      for (std::size_t u = 0; u < m; ++u) sc(r, s, u) = (*c)[u];
    }
  if (auto bad = lie::antisymmetry_violation(sc)) throw ConsistencyAlarm(*bad);
  if (auto bad = lie::jacobi_violation(sc)) throw ConsistencyAlarm(*bad);
  return sc;
}

std::string to_string(Factor::Type t) {
  switch (t) {
    case Factor::Type::Sl2:
      return "sl2";
    case Factor::Type::N:
      return "n";
    default:
      return "abelian";
  }
}

lie::StructureConstants model_algebra(std::size_t S, std::size_t N, std::size_t C) {
  lie::StructureConstants sc(3 * S + 2 * N + C);
  auto set = [&](std::size_t a, std::size_t b, std::size_t u, const Rational& v) {
    sc(a, b, u) = v;
    sc(b, a, u) = -v;
  };
  for (std::size_t k = 0; k < S; ++k) {
    const std::size_t f = 3 * k, h = f + 1, e = f + 2;
    set(f, h, f, 1);
    set(h, e, e, 1);
    set(f, e, h, 2);
  }
  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t f = 3 * S + 2 * k, e = f + 1;
    set(f, e, f, 1);
  }
  return sc;
}

namespace {

std::vector<Vector> from_coords(const std::vector<Vector>& coords, const lie::Subspace& basis, std::size_t m) {
  std::vector<Vector> out;
  for (const auto& c : coords) {
    Vector v(m);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (c[k] != 0) v = linalg::axpy(v, c[k], basis[k]);
    out.push_back(std::move(v));
  }
  return out;
}

Matrix combination(const std::vector<Matrix>& ms, const std::vector<Rational>& c) {
  Matrix out(ms.front().rows(), ms.front().cols());
  for (std::size_t k = 0; k < ms.size(); ++k)
    for (std::size_t r = 0; r < out.rows(); ++r)
      for (std::size_t s = 0; s < out.cols(); ++s)
        if (ms[k](r, s) != 0) out(r, s) += c[k] * ms[k](r, s);
  return out;
}

// Deterministic coefficient patterns for "generic" combinations.
std::vector<Rational> pattern(std::size_t len, int attempt) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  std::vector<Rational> c(len);
  for (std::size_t k = 0; k < len; ++k) {
    const long base = primes[(k + static_cast<std::size_t>(attempt)) % 16];
    c[k] = rational_pow(Rational(base), static_cast<long>(k % 3) + 1) * ((k + static_cast<std::size_t>(attempt)) % 2 ? 1 : -1);
  }
  return c;
}

// Splits the space (dim d, in coordinates) into the eigenspaces of a generic
// combination of commuting operators, each of dimension `piece`.
std::optional<std::vector<std::vector<Vector>>> split_by_generic(const std::vector<Matrix>& ops, std::size_t pieces,
                                                                 std::size_t piece) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto spaces = linalg::rational_eigenspaces(combination(ops, pattern(ops.size(), attempt)));
    if (spaces.size() != pieces) continue;
    bool ok = std::all_of(spaces.begin(), spaces.end(), [&](const auto& s) { return s.second.size() == piece; });
    if (!ok) continue;
    std::vector<std::vector<Vector>> out;
    for (auto& s : spaces) out.push_back(s.second);
    return out;
  }
  return std::nullopt;
}

std::vector<lie::Subspace> simple_ideals(const lie::StructureConstants& sc, const lie::Subspace& semisimple, std::size_t S) {
  const std::size_t m = sc.dim();
  if (S == 1) return {semisimple};
  const std::size_t d = semisimple.size();
  std::vector<Matrix> ads;
  for (const auto& y : semisimple) ads.push_back(lie::restricted_ad(sc, y, semisimple));
  // Centroid: T with T ad_y = ad_y T.
  Matrix sys(ads.size() * d * d, d * d);
  for (std::size_t a = 0; a < ads.size(); ++a)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) {
        const std::size_t row = (a * d + r) * d + s;
        for (std::size_t k = 0; k < d; ++k) {
          sys(row, r * d + k) += ads[a](k, s);   // (T ad)_{rs} = sum_k T_rk ad_ks
          sys(row, k * d + s) -= ads[a](r, k);   // (ad T)_{rs} = sum_k ad_rk T_ks
        }
      }
  std::vector<Matrix> centroid;
  for (const auto& v : linalg::nullspace(sys)) {
    Matrix t(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) t(r, s) = v[r * d + s];
    centroid.push_back(std::move(t));
  }
  if (centroid.size() != S)
    throw ConsistencyAlarm("semisimple part has a centroid of dimension " + std::to_string(centroid.size()) + ", expected " +
                           std::to_string(S));
  auto pieces = split_by_generic(centroid, S, 3);
  if (!pieces) throw ConsistencyAlarm("could not split the semisimple part into rational sl(2) ideals");
  std::vector<lie::Subspace> out;
  for (const auto& p : *pieces) out.push_back(lie::span(from_coords(p, semisimple, m), m));
  return out;
}

}  // namespace

FactorDecomposition decompose_factors(const lie::StructureConstants& sc) {
  const std::size_t m = sc.dim();
  FactorDecomposition d;
  d.m = m;
  const lie::Subspace all = lie::whole(m);
  const lie::Subspace z = lie::center(sc);
  const lie::Subspace d1 = lie::bracket_span(sc, all, all);
  const lie::Subspace d2 = lie::bracket_span(sc, d1, d1);
  if (d2.size() % 3 != 0)
    throw ConsistencyAlarm("not a product of sl(2), n and abelian factors: second derived algebra has dimension " +
                           std::to_string(d2.size()));
  d.S = d2.size() / 3;
  d.N = d1.size() - d2.size();
  d.C = z.size();
  if (3 * d.S + 2 * d.N + d.C != m)
    throw ConsistencyAlarm("not a product of sl(2), n and abelian factors: m = " + std::to_string(m) + " but 3S+2N+C = " +
                           std::to_string(3 * d.S + 2 * d.N + d.C));

  if (d.S > 0)
    for (const auto& ideal : simple_ideals(sc, d2, d.S)) d.factors.push_back({Factor::Type::Sl2, lie::chevalley_triple(sc, ideal), "", {}});

  if (d.N > 0) {
    const lie::Subspace r = lie::centralizer(sc, d2, all);
    const lie::Subspace rd = lie::bracket_span(sc, r, r);
    if (rd.size() != d.N) throw ConsistencyAlarm("derived algebra of the sl(2) centralizer has the wrong dimension");
    std::vector<Matrix> ops;
    for (const auto& y : r) ops.push_back(lie::restricted_ad(sc, y, rd));
    auto lines = split_by_generic(ops, d.N, 1);
    if (!lines) throw ConsistencyAlarm("could not separate the n factors");
    std::vector<Vector> fs;
    for (const auto& l : *lines) fs.push_back(from_coords(l, rd, m)[0]);
    std::vector<Vector> es;
    for (std::size_t k = 0; k < d.N; ++k) {
      // [F_l, E_k] = delta_kl F_l with E_k in r
      Matrix sys(m * d.N, r.size());
      Vector rhs(m * d.N);
      for (std::size_t q = 0; q < r.size(); ++q)
        for (std::size_t l = 0; l < d.N; ++l) {
          Vector br = lie::bracket(sc, fs[l], r[q]);
          for (std::size_t u = 0; u < m; ++u) sys(l * m + u, q) = br[u];
        }
      for (std::size_t u = 0; u < m; ++u) rhs[k * m + u] = fs[k][u];
      auto x = linalg::solve(sys, rhs);
      if (!x) throw ConsistencyAlarm("no normalizing element for an n factor");
      es.push_back(from_coords({*x}, r, m)[0]);
    }
    if (d.N > 1) {
      // E_k += sum_j a_kj F_j so that the E_k commute.
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t k = 0; k < d.N; ++k)
        for (std::size_t l = k + 1; l < d.N; ++l) pairs.emplace_back(k, l);
      Matrix sys(m * pairs.size(), d.N * d.N);
      Vector rhs(m * pairs.size());
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [k, l] = pairs[p];
        Vector target = lie::bracket(sc, es[k], es[l]);
        for (std::size_t u = 0; u < m; ++u) rhs[p * m + u] = -target[u];
        for (std::size_t j = 0; j < d.N; ++j) {
          Vector ekfj = lie::bracket(sc, es[k], fs[j]);
          Vector fjel = lie::bracket(sc, fs[j], es[l]);
          for (std::size_t u = 0; u < m; ++u) {
            sys(p * m + u, l * d.N + j) += ekfj[u];
            sys(p * m + u, k * d.N + j) += fjel[u];
          }
        }
      }
      auto a = linalg::solve(sys, rhs);
      if (!a) throw ConsistencyAlarm("n factors cannot be made to commute");
      for (std::size_t k = 0; k < d.N; ++k)
        for (std::size_t j = 0; j < d.N; ++j) es[k] = linalg::axpy(es[k], (*a)[k * d.N + j], fs[j]);
    }
    for (std::size_t k = 0; k < d.N; ++k) d.factors.push_back({Factor::Type::N, {fs[k], es[k]}, "", {}});
  }
  if (d.C > 0) d.factors.push_back({Factor::Type::Abelian, z, "", {}});

  std::vector<Vector> rows;
  for (const auto& f : d.factors) rows.insert(rows.end(), f.generators.begin(), f.generators.end());
  d.transform = Matrix::from_rows(rows, m);
  if (linalg::rank(d.transform) != m) throw ConsistencyAlarm("factor generators do not form a basis");
  if (lie::change_basis(sc, rows) != model_algebra(d.S, d.N, d.C))
    throw ConsistencyAlarm("factor generators do not reproduce the model product algebra");
  return d;
}

BoundReport check_theorem_bound(const FactorDecomposition& d, std::size_t n, bool parallelizable) {
  BoundReport rep;
  const long S = static_cast<long>(d.S), N = static_cast<long>(d.N), C = static_cast<long>(d.C), nn = static_cast<long>(n);
  auto add = [&](std::string name, std::string instance, bool applies, bool enforced, bool holds) {
    rep.checks.push_back({std::move(name), std::move(instance), applies, enforced, holds});
    if (enforced && !holds) rep.passed = false;
  };
  const long total = 3 * S + 2 * N + C;
  add("3S+2N+C <= n", std::to_string(total) + " <= " + std::to_string(nn), !parallelizable, !parallelizable, total <= nn);
  const bool commutative = S == 0 && N == 0;
  add("C < n (commutative)", std::to_string(C) + " < " + std::to_string(nn), !parallelizable && commutative,
      !parallelizable && commutative, C < nn);
  const long bound = 4 * S + 2 * N + C - 1;
  add("n >= 4S+2N+C-1", std::to_string(nn) + " >= " + std::to_string(bound), !parallelizable, !parallelizable && S > 1,
      nn >= bound);
  return rep;
}

FactorDecomposition factor_action_profile(FactorDecomposition d, const SymmetrySolution& sol, const WebSpec& w) {
  std::size_t transverse_sl2 = 0;
  for (auto& f : d.factors) {
    f.phis.clear();
    bool transverse = false;
    for (const auto& g : f.generators) {
      UniJet phi = induced_phi(field_combination(sol.basis, g), w);
      transverse |= !phi.truncate(w.order() - 2).is_zero();
      f.phis.push_back(std::move(phi));
    }
    f.action = transverse ? "transverse" : "tangent";
    if (transverse && f.type == Factor::Type::Sl2) ++transverse_sl2;
  }
  if (transverse_sl2 > 1)
    throw ConsistencyAlarm(std::to_string(transverse_sl2) + " sl(2) factors are transverse to the level sets of f");
  return d;
}

RouteComparison compare_routes(const FactorDecomposition& d, const BlockDecomposition& b) {
  RouteComparison c{d.S, d.N, d.C, b.S(), b.N(), b.C(), false};
  c.agree = c.S_invariant == c.S_blocks && c.N_invariant == c.N_blocks && c.C_invariant == c.C_blocks;
  return c;
}

}  // namespace webiso
