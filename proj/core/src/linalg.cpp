#include "webiso/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include "webiso/error.hpp"

namespace webiso::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row length mismatch in matrix construction");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product dimension mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw ShapeError("matrix-vector dimension mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (v[k] != 0) out[i] += a(i, k) * v[k];
  return out;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw ShapeError("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = row_reduce(std::move(aug));
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Echelon e = row_reduce(Matrix::from_rows(vectors, dim));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) {
    if (is_zero(v)) return Vector{};
    return std::nullopt;
  }
  Matrix a = Matrix::from_rows(basis, v.size()).transpose();
  auto x = solve(a, v);
  return x;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

Vector add(const Vector& a, const Vector& b) { return axpy(a, 1, b); }

Vector scaled(const Vector& a, const Rational& s) {
  Vector out(a);
  for (auto& x : out) x *= s;
  return out;
}

Vector axpy(const Vector& a, const Rational& s, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  Vector out(a);
  if (s == 0) return out;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) out[i] += s * b[i];
  return out;
}

void IncrementalEchelon::grow(std::size_t cols) {
  if (cols < cols_) throw ShapeError("echelon column count cannot shrink");
  for (auto& r : pivot_rows_) r.resize(cols);
  cols_ = cols;
}

bool IncrementalEchelon::add_row(Vector row) {
  if (row.size() != cols_) throw ShapeError("echelon row length mismatch");
  for (std::size_t k = 0; k < pivot_cols_.size(); ++k) {
    const std::size_t c = pivot_cols_[k];
    if (row[c] == 0) continue;
    Rational f = row[c];
    const Vector& p = pivot_rows_[k];
    for (std::size_t j = 0; j < cols_; ++j)
      if (p[j] != 0) row[j] -= f * p[j];
  }
  std::size_t lead = 0;
  while (lead < cols_ && row[lead] == 0) ++lead;
  if (lead == cols_) return false;
  Rational inv = 1 / row[lead];
  for (std::size_t j = lead; j < cols_; ++j)
    if (row[j] != 0) row[j] *= inv;
  for (auto& p : pivot_rows_) {
    if (p[lead] == 0) continue;
    Rational f = p[lead];
    for (std::size_t j = 0; j < cols_; ++j)
      if (row[j] != 0) p[j] -= f * row[j];
  }
  pivot_cols_.push_back(lead);
  pivot_rows_.push_back(std::move(row));
  return true;
}

Matrix IncrementalEchelon::reduced() const {
  std::vector<std::size_t> order(pivot_cols_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivot_cols_[a] < pivot_cols_[b]; });
  Matrix m(order.size(), cols_);
  for (std::size_t r = 0; r < order.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = pivot_rows_[order[r]][c];
  return m;
}

std::vector<std::size_t> IncrementalEchelon::pivots() const {
  auto p = pivot_cols_;
  std::sort(p.begin(), p.end());
  return p;
}

Vector characteristic_polynomial(const Matrix& m) {
  // Faddeev-LeVerrier.
  const std::size_t n = m.rows();
  if (n != m.cols()) throw ShapeError("characteristic polynomial of a non-square matrix");
  Vector c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    Matrix amk = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

namespace {

std::vector<Integer> divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const Vector& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void trim(Vector& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a / b, b nonzero with trimmed leading coefficient.
std::pair<Vector, Vector> divide(Vector a, const Vector& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Vector q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
  }
  trim(a);
  return {q, a};
}

Vector gcd(Vector a, Vector b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vector r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Integer coefficients with the same roots.
std::vector<Integer> primitive(const Vector& poly) {
  Integer lcm = 1;
  for (const auto& q : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& q : poly) ints.push_back(Integer(q * lcm));
  return ints;
}

// Approximate real roots (Durand-Kerner), refined into exact candidates with
// denominators dividing the leading coefficient.
std::vector<Rational> numeric_candidates(const Vector& poly, const Integer& lead) {
  using C = std::complex<long double>;
  const std::size_t d = poly.size() - 1;
  std::vector<C> a(d + 1);
  for (std::size_t i = 0; i <= d; ++i) a[i] = static_cast<long double>(Rational(poly[i] / poly[d]).get_d());
  std::vector<C> z(d);
  for (std::size_t i = 0; i < d; ++i) z[i] = std::pow(C(0.4L, 0.9L), static_cast<int>(i));
  auto value = [&](C x) {
    C acc = 0;
    for (std::size_t i = d + 1; i-- > 0;) acc = acc * x + a[i];
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (std::size_t i = 0; i < d; ++i) {
      C den = 1;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) den *= z[i] - z[j];
      const C step = value(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-15L) break;
  }
  std::vector<Rational> out;
  const long double scale = static_cast<long double>(lead.get_d());
  for (const auto& r : z) {
    if (!std::isfinite(r.real()) || std::abs(r.imag()) > 1e-3L * (1 + std::abs(r.real()))) continue;
    const Integer k(static_cast<double>(std::round(r.real() * scale)));
    for (int delta : {0, -1, 1}) {
      Rational cand(k + delta, lead);
      cand.canonicalize();
      out.push_back(cand);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Vector& poly_in) {
  Vector poly(poly_in);
  trim(poly);
  if (poly.size() <= 1) return {};
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (poly[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  poly.erase(poly.begin(), poly.begin() + static_cast<long>(low));
  if (poly.size() <= 1) return roots;
  // Square-free part: repeated eigenvalues would inflate the constant term.
  Vector deriv(poly.size() - 1);
  for (std::size_t i = 1; i < poly.size(); ++i) deriv[i - 1] = poly[i] * static_cast<long>(i);
  const Vector g = gcd(poly, deriv);
  if (g.size() > 1) poly = divide(poly, g).first;
  const std::vector<Integer> ints = primitive(poly);
  std::vector<Rational> cands;
  if (mpz_sizeinbase(ints.front().get_mpz_t(), 2) <= 32 && mpz_sizeinbase(ints.back().get_mpz_t(), 2) <= 32) {
    for (const auto& p : divisors(ints.front()))
      for (const auto& q : divisors(ints.back()))
        for (int sign : {1, -1}) {
          Rational cand(p * sign, q);
          cand.canonicalize();
          cands.push_back(cand);
        }
  } else {
    cands = numeric_candidates(poly, abs(ints.back()));
  }
  for (const auto& cand : cands)
    if (evaluate(poly, cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::pair<Rational, std::vector<Vector>>> rational_eigenspaces(const Matrix& m) {
  std::vector<std::pair<Rational, std::vector<Vector>>> out;
  for (const auto& lambda : rational_roots(characteristic_polynomial(m))) {
    Matrix shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
    out.emplace_back(lambda, nullspace(shifted));
  }
  return out;
}

}  // namespace webiso::linalg
