#include "webiso/lie.hpp"

#include <array>

#include "webiso/error.hpp"

namespace webiso::lie {

Vector bracket(const StructureConstants& sc, const Vector& a, const Vector& b) {
  const std::size_t m = sc.dim();
  Vector out(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (a[r] == 0) continue;
    for (std::size_t s = 0; s < m; ++s) {
      if (b[s] == 0) continue;
      const Rational ab = a[r] * b[s];
      for (std::size_t u = 0; u < m; ++u)
        if (sc(r, s, u) != 0) out[u] += ab * sc(r, s, u);
    }
  }
  return out;
}

Matrix ad(const StructureConstants& sc, const Vector& x) {
  const std::size_t m = sc.dim();
  Matrix a(m, m);
  for (std::size_t s = 0; s < m; ++s) {
    Vector e(m);
    e[s] = 1;
    Vector col = bracket(sc, x, e);
    for (std::size_t u = 0; u < m; ++u) a(u, s) = col[u];
  }
  return a;
}

std::optional<std::string> antisymmetry_violation(const StructureConstants& sc) {
  const std::size_t m = sc.dim();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = r; s < m; ++s)
      for (std::size_t u = 0; u < m; ++u)
        if (sc(r, s, u) != -sc(s, r, u))
          return "lambda(" + std::to_string(r + 1) + "," + std::to_string(s + 1) + "," + std::to_string(u + 1) +
                 ") is not antisymmetric";
  return std::nullopt;
}

std::optional<std::string> jacobi_violation(const StructureConstants& sc) {
  const std::size_t m = sc.dim();
  auto e = [m](std::size_t k) {
    Vector v(m);
    v[k] = 1;
    return v;
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        Vector sum = bracket(sc, e(a), bracket(sc, e(b), e(c)));
        sum = linalg::add(sum, bracket(sc, e(b), bracket(sc, e(c), e(a))));
        sum = linalg::add(sum, bracket(sc, e(c), bracket(sc, e(a), e(b))));
        if (!linalg::is_zero(sum))
          return "Jacobi identity fails on basis elements " + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                 ", " + std::to_string(c + 1);
      }
  return std::nullopt;
}

StructureConstants change_basis(const StructureConstants& sc, const std::vector<Vector>& basis) {
  const std::size_t k = basis.size();
  StructureConstants out(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s) {
      auto c = linalg::coordinates(basis, bracket(sc, basis[r], basis[s]));
      if (!c) throw Error("change_basis: family is not closed under the bracket");
      for (std::size_t u = 0; u < k; ++u) out(r, s, u) = (*c)[u];
    }
  return out;
}

Subspace whole(std::size_t m) {
  Subspace s;
  for (std::size_t k = 0; k < m; ++k) {
    Vector v(m);
    v[k] = 1;
    s.push_back(std::move(v));
  }
  return s;
}

Subspace span(const std::vector<Vector>& vectors, std::size_t m) { return linalg::span_basis(vectors, m); }

Subspace intersect(const Subspace& a, const Subspace& b, std::size_t m) {
  if (a.empty() || b.empty()) return {};
  // x = sum alpha_i a_i = sum beta_j b_j
  Matrix sys(m, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t r = 0; r < m; ++r) sys(r, i) = a[i][r];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t r = 0; r < m; ++r) sys(r, a.size() + j) = -b[j][r];
  std::vector<Vector> out;
  for (const auto& sol : linalg::nullspace(sys)) {
    Vector x(m);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (sol[i] != 0) x = linalg::axpy(x, sol[i], a[i]);
    out.push_back(std::move(x));
  }
  return span(out, m);
}

Subspace bracket_span(const StructureConstants& sc, const Subspace& a, const Subspace& b) {
  std::vector<Vector> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(bracket(sc, x, y));
  return span(out, sc.dim());
}

Subspace centralizer(const StructureConstants& sc, const Subspace& of, const Subspace& within) {
  const std::size_t m = sc.dim();
  if (within.empty()) return {};
  if (of.empty()) return within;
  Matrix sys(m * of.size(), within.size());
  for (std::size_t k = 0; k < within.size(); ++k)
    for (std::size_t j = 0; j < of.size(); ++j) {
      Vector b = bracket(sc, within[k], of[j]);
      for (std::size_t u = 0; u < m; ++u) sys(j * m + u, k) = b[u];
    }
  std::vector<Vector> out;
  for (const auto& sol : linalg::nullspace(sys)) {
    Vector x(m);
    for (std::size_t k = 0; k < within.size(); ++k)
      if (sol[k] != 0) x = linalg::axpy(x, sol[k], within[k]);
    out.push_back(std::move(x));
  }
  return span(out, m);
}

Subspace center(const StructureConstants& sc) { return centralizer(sc, whole(sc.dim()), whole(sc.dim())); }

Subspace kernel_within(const std::vector<Vector>& images, const Subspace& within, std::size_t m) {
  if (within.empty()) return {};
  const std::size_t target = images.empty() ? 0 : images[0].size();
  Matrix sys(target, within.size());
  for (std::size_t k = 0; k < within.size(); ++k) {
    Vector img(target);
    for (std::size_t r = 0; r < m; ++r)
      if (within[k][r] != 0) img = linalg::axpy(img, within[k][r], images[r]);
    for (std::size_t t = 0; t < target; ++t) sys(t, k) = img[t];
  }
  std::vector<Vector> out;
  for (const auto& sol : linalg::nullspace(sys)) {
    Vector x(m);
    for (std::size_t k = 0; k < within.size(); ++k)
      if (sol[k] != 0) x = linalg::axpy(x, sol[k], within[k]);
    out.push_back(std::move(x));
  }
  return span(out, m);
}

namespace {

Vector combine(const Vector& coords, const Subspace& basis, std::size_t m) {
  Vector v(m);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coords[k] != 0) v = linalg::axpy(v, coords[k], basis[k]);
  return v;
}

bool is_square(const Rational& q) {
  return q > 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

Rational sqrt_exact(const Rational& q) {
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
  return Rational(a, b);
}


// Nonzero isotropic vector of the Killing form on a 3-dimensional ideal, in ideal coordinates.
// Fixing two coordinates leaves a quadratic in the third; a square discriminant gives a rational root.
std::optional<Vector> isotropic_vector(const StructureConstants& sc, const Subspace& ideal, long max_height = 400) {
  std::vector<Matrix> ads;
  for (const auto& y : ideal) ads.push_back(restricted_ad(sc, y, ideal));
  Matrix g(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const Matrix ab = ads[i] * ads[j];
      g(i, j) = ab(0, 0) + ab(1, 1) + ab(2, 2);
    }
  for (std::size_t k = 0; k < 3; ++k)
    if (g(k, k) == 0) {
      Vector v(3);
      v[k] = 1;
      return v;
    }
  for (long h = 1; h <= max_height; ++h)
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
      for (long x = -h; x <= h; ++x)
        for (long y : {-h, h}) {
          for (int swap = 0; swap < 2; ++swap) {
            const long xi = swap ? y : x, yj = swap ? x : y;
            if (swap && std::labs(x) == h) continue;
            const Rational a = g(k, k);
            const Rational b = 2 * (g(i, k) * xi + g(j, k) * yj);
            const Rational c = g(i, i) * xi * xi + 2 * g(i, j) * xi * yj + g(j, j) * yj * yj;
            const Rational disc = b * b - 4 * a * c;
            if (disc < 0 || (disc != 0 && !is_square(disc))) continue;
            Vector v(3);
            v[i] = xi;
            v[j] = yj;
            v[k] = (-b + (disc == 0 ? Rational(0) : sqrt_exact(disc))) / (2 * a);
            return v;
          }
        }
    }
  return std::nullopt;
}

// Triple grown from a nilpotent E by two linear solves.
std::optional<std::vector<Vector>> triple_from_nilpotent(const StructureConstants& sc, const Subspace& ideal, const Vector& ec) {
  const std::size_t m = sc.dim();
  const Vector e = combine(ec, ideal, m);
  // [H, E] = E  <=>  -ad(E) H = E
  Matrix ade = restricted_ad(sc, e, ideal);
  Matrix neg(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) neg(r, c) = -ade(r, c);
  auto hc = linalg::solve(neg, ec);
  if (!hc) return std::nullopt;
  const Vector h = combine(*hc, ideal, m);
  // [H, F] = -F and [F, E] = -ad(E) F = 2H
  Matrix adh = restricted_ad(sc, h, ideal);
  Matrix sys(6, 3);
  Vector rhs(6);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      sys(r, c) = adh(r, c) + (r == c ? 1 : 0);
      sys(r + 3, c) = -ade(r, c);
    }
    rhs[r + 3] = 2 * (*hc)[r];
  }
  auto fc = linalg::solve(sys, rhs);
  if (!fc) return std::nullopt;
  return std::vector<Vector>{combine(*fc, ideal, m), h, e};
}

}  // namespace

std::vector<Vector> chevalley_triple(const StructureConstants& sc, const Subspace& ideal) {
  const std::size_t m = sc.dim();
  for (int radius = 1; radius <= 3; ++radius) {
    for (int a = -radius; a <= radius; ++a)
      for (int b = -radius; b <= radius; ++b)
        for (int c = -radius; c <= radius; ++c) {
          if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != radius) continue;
          Vector x = linalg::axpy(linalg::axpy(linalg::scaled(ideal[0], a), b, ideal[1]), c, ideal[2]);
          Matrix ad = restricted_ad(sc, x, ideal);
          Matrix sq = ad * ad;
          const Rational half = (sq(0, 0) + sq(1, 1) + sq(2, 2)) / 2;
          if (!is_square(half)) continue;
          Vector h = linalg::scaled(x, 1 / sqrt_exact(half));
          Matrix adh = restricted_ad(sc, h, ideal);
          auto eigen = [&](const Rational& lambda) {
            Matrix t = adh;
            for (std::size_t k = 0; k < 3; ++k) t(k, k) -= lambda;
            return linalg::nullspace(t);
          };
          auto fs = eigen(-1), es = eigen(1);
          if (fs.size() != 1 || es.size() != 1) continue;
          Vector f = combine(fs[0], ideal, m);
          Vector e = combine(es[0], ideal, m);
          auto lam = linalg::coordinates({h}, bracket(sc, f, e));
          if (!lam || (*lam)[0] == 0) continue;
          e = linalg::scaled(e, 2 / (*lam)[0]);
          return {f, h, e};
        }
  }
  // Slow path: a rational nilpotent element from the isotropic cone of the Killing form.
  if (auto v = isotropic_vector(sc, ideal))
    if (auto t = triple_from_nilpotent(sc, ideal, *v)) return *t;
  throw ConsistencyAlarm("no rational Chevalley triple found in an sl(2) ideal");
}

// Matrix of v -> [y, v] on the subspace `sub` (assumed invariant), in sub's coordinates.
Matrix restricted_ad(const StructureConstants& sc, const Vector& y, const Subspace& sub) {
  Matrix a(sub.size(), sub.size());
  for (std::size_t k = 0; k < sub.size(); ++k) {
    auto c = linalg::coordinates(sub, bracket(sc, y, sub[k]));
    if (!c) throw ConsistencyAlarm("subspace is not invariant under the adjoint action");
    for (std::size_t r = 0; r < sub.size(); ++r) a(r, k) = (*c)[r];
  }
  return a;
}

std::vector<Vector> nilpotent_triple(const std::vector<Vector>& triple, int alpha, int beta) {
  // (alpha + beta y)^2, (alpha + beta y)(gamma + delta y), (gamma + delta y)^2 with alpha delta - beta gamma = 1
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), Integer(alpha).get_mpz_t(), Integer(beta).get_mpz_t());
  if (g != 1 && g != -1) throw DomainError("nilpotent_triple: coefficients must be coprime");
  const Rational a = alpha, b = beta, d = Rational(s) * Rational(g), c = -Rational(t) * Rational(g);
  auto mix = [&](const Rational& x, const Rational& y, const Rational& z) {
    return linalg::axpy(linalg::axpy(linalg::scaled(triple[0], x), y, triple[1]), z, triple[2]);
  };
  return {mix(a * a, 2 * a * b, b * b), mix(a * c, a * d + b * c, b * d), mix(c * c, 2 * c * d, d * d)};
}

bool contains(const Subspace& s, const Vector& v) { return linalg::is_zero(v) || linalg::coordinates(s, v).has_value(); }

}  // namespace webiso::lie
