#include "webiso/jets.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "webiso/error.hpp"

namespace webiso {

namespace {

constexpr std::size_t kMaxVariables = 64;

void enumerate_degree(std::size_t n, int d, std::vector<int>& current, std::size_t pos,
                      std::vector<int>& out) {
  if (pos + 1 == n) {
    current[pos] = d;
    out.insert(out.end(), current.begin(), current.end());
    return;
  }
  for (int v = d; v >= 0; --v) {
    current[pos] = v;
    enumerate_degree(n, d - v, current, pos + 1, out);
  }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t n, int order) : n_(n), order_(order) {
  if (n == 0 || n > kMaxVariables) throw ShapeError("unsupported number of variables: " + std::to_string(n));
  if (order < 0) throw ShapeError("negative truncation order");
  binom_width_ = order + static_cast<int>(n) + 2;
  binom_.assign(static_cast<std::size_t>(binom_width_ * binom_width_), 0);
  for (int a = 0; a < binom_width_; ++a) {
    binom_[static_cast<std::size_t>(a * binom_width_)] = 1;
    for (int b = 1; b <= a; ++b)
      binom_[static_cast<std::size_t>(a * binom_width_ + b)] =
          binom_[static_cast<std::size_t>((a - 1) * binom_width_ + b - 1)] +
          (b <= a - 1 ? binom_[static_cast<std::size_t>((a - 1) * binom_width_ + b)] : 0);
  }
  std::vector<int> current(n, 0);
  for (int d = 0; d <= order; ++d) {
    std::size_t before = exps_.size();
    enumerate_degree(n, d, current, 0, exps_);
    degree_.insert(degree_.end(), (exps_.size() - before) / n, d);
  }
}

std::size_t MonomialBasis::binom(int a, int b) const {
  if (b < 0 || a < 0 || b > a) return 0;
  return binom_[static_cast<std::size_t>(a * binom_width_ + b)];
}

std::size_t MonomialBasis::count_upto(int d) const {
  if (d < 0) return 0;
  if (d > order_) d = order_;
  return binom(d + static_cast<int>(n_), static_cast<int>(n_));
}

std::size_t MonomialBasis::index(std::span<const int> e) const {
  int d = 0;
  for (int v : e) d += v;
  if (d > order_) throw ShapeError("monomial degree exceeds truncation order");
  std::size_t rank = count_upto(d - 1);
  int rem = d;
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    const int k = static_cast<int>(n_ - i - 1);
    if (e[i] < rem) rank += binom(rem - e[i] - 1 + k, k);
    rem -= e[i];
  }
  return rank;
}

std::size_t MonomialBasis::index_of_sum(std::size_t a, std::size_t b) const {
  std::array<int, kMaxVariables> sum{};
  auto ea = exponents(a), eb = exponents(b);
  for (std::size_t i = 0; i < n_; ++i) sum[i] = ea[i] + eb[i];
  return index(std::span<const int>(sum.data(), n_));
}

BasisPtr make_basis(std::size_t n, int order) { return std::make_shared<const MonomialBasis>(n, order); }

// ---------------------------------------------------------------------------
// MultiJet

MultiJet::MultiJet(BasisPtr basis, Point base) : basis_(std::move(basis)), base_(std::move(base)) {
  if (base_.size() != basis_->n()) throw ShapeError("base point dimension mismatch");
  coeffs_.assign(basis_->size(), Rational(0));
}

MultiJet::MultiJet(BasisPtr basis, Point base, std::vector<Rational> coeffs)
    : basis_(std::move(basis)), base_(std::move(base)), coeffs_(std::move(coeffs)) {
  if (base_.size() != basis_->n()) throw ShapeError("base point dimension mismatch");
  if (coeffs_.size() != basis_->size()) throw ShapeError("coefficient vector does not match monomial basis");
}

MultiJet MultiJet::constant(BasisPtr basis, Point base, const Rational& c) {
  MultiJet j(std::move(basis), std::move(base));
  j.coeffs_[0] = c;
  return j;
}

MultiJet MultiJet::coordinate(BasisPtr basis, Point base, std::size_t i) {
  if (i < 1 || i > basis->n()) throw ShapeError("variable index out of range");
  MultiJet j(std::move(basis), std::move(base));
  j.coeffs_[0] = j.base_[i - 1];
  if (j.order() >= 1) {
    Exponents e(j.n(), 0);
    e[i - 1] = 1;
    j.coeffs_[j.basis_->index(e)] = 1;
  }
  return j;
}

Rational MultiJet::coeff(const Exponents& e) const {
  if (e.size() != n()) throw ShapeError("exponent vector length mismatch");
  int d = 0;
  for (int v : e) {
    if (v < 0) throw ShapeError("negative exponent");
    d += v;
  }
  if (d > order()) return 0;
  return coeffs_[basis_->index(e)];
}

std::vector<std::pair<Exponents, Rational>> MultiJet::terms() const {
  std::vector<std::pair<Exponents, Rational>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    auto e = basis_->exponents(k);
    out.emplace_back(Exponents(e.begin(), e.end()), coeffs_[k]);
  }
  return out;
}

bool MultiJet::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

std::optional<std::size_t> MultiJet::first_nonzero_upto(int d) const {
  const std::size_t limit = basis_->count_upto(d);
  for (std::size_t k = 0; k < limit; ++k)
    if (coeffs_[k] != 0) return k;
  return std::nullopt;
}

MultiJet MultiJet::truncate(int order) const {
  if (order > this->order()) throw ShapeError("cannot raise the order of a jet by truncation");
  if (order == this->order()) return *this;
  return truncate(make_basis(n(), order));
}

MultiJet MultiJet::truncate(const BasisPtr& lower) const {
  if (lower->n() != n() || lower->order() > order()) throw ShapeError("invalid truncation target");
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lower->size()));
  return MultiJet(lower, base_, std::move(c));
}

bool MultiJet::compatible(const MultiJet& other) const {
  return n() == other.n() && order() == other.order() && base_ == other.base_;
}

std::string MultiJet::dump() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    os << to_string(coeffs_[k]) << " ";
    for (int v : basis_->exponents(k)) os << " " << v;
    os << "\n";
  }
  return os.str();
}

bool operator==(const MultiJet& a, const MultiJet& b) { return a.compatible(b) && a.coeffs_ == b.coeffs_; }

namespace {

void require_compatible(const MultiJet& a, const MultiJet& b, const char* op) {
  if (a.n() != b.n()) throw ShapeError(std::string(op) + ": dimension mismatch");
  if (a.order() != b.order()) throw ShapeError(std::string(op) + ": truncation order mismatch");
  if (a.base() != b.base()) throw ShapeError(std::string(op) + ": base point mismatch");
}

}  // namespace

MultiJet operator+(const MultiJet& a, const MultiJet& b) {
  require_compatible(a, b, "jet_add");
  std::vector<Rational> c(a.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k)
    if (b.coeff(k) != 0) c[k] += b.coeff(k);
  return MultiJet(a.basis(), a.base(), std::move(c));
}

MultiJet operator-(const MultiJet& a, const MultiJet& b) {
  require_compatible(a, b, "jet_sub");
  std::vector<Rational> c(a.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k)
    if (b.coeff(k) != 0) c[k] -= b.coeff(k);
  return MultiJet(a.basis(), a.base(), std::move(c));
}

MultiJet operator-(const MultiJet& a) { return Rational(-1) * a; }

MultiJet operator*(const Rational& s, const MultiJet& a) {
  std::vector<Rational> c(a.coeffs());
  for (auto& x : c)
    if (x != 0) x *= s;
  return MultiJet(a.basis(), a.base(), std::move(c));
}

MultiJet operator*(const MultiJet& a, const MultiJet& b) {
  require_compatible(a, b, "jet_mul");
  const MonomialBasis& basis = *a.basis();
  const int w = basis.order();
  std::vector<Rational> c(basis.size());
  Rational t;
  for (std::size_t ia = 0; ia < basis.size(); ++ia) {
    const Rational& x = a.coeff(ia);
    if (x == 0) continue;
    const std::size_t limit = basis.count_upto(w - basis.degree(ia));
    for (std::size_t ib = 0; ib < limit; ++ib) {
      const Rational& y = b.coeff(ib);
      if (y == 0) continue;
      mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
      Rational& dst = c[basis.index_of_sum(ia, ib)];
      mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), t.get_mpq_t());
    }
  }
  return MultiJet(a.basis(), a.base(), std::move(c));
}

MultiJet jet_add(const MultiJet& a, const MultiJet& b) { return a + b; }
MultiJet jet_mul(const MultiJet& a, const MultiJet& b) { return a * b; }
MultiJet jet_scale(const MultiJet& a, const Rational& s) { return s * a; }

MultiJet reciprocal(const MultiJet& a) {
  const Rational& c = a.constant_term();
  if (c == 0) throw DomainError("reciprocal of a jet vanishing at the base point");
  // 1/(c + s) = sum_k (-1)^k s^k / c^(k+1)
  std::vector<Rational> series(static_cast<std::size_t>(a.order()) + 1);
  Rational term = 1 / c;
  for (auto& q : series) {
    q = term;
    term *= -1 / c;
  }
  return uni_compose(UniJet(c, std::move(series)), a);
}

MultiJet power(const MultiJet& a, long exponent) {
  if (exponent < 0) return power(reciprocal(a), -exponent);
  MultiJet result = MultiJet::constant(a.basis(), a.base(), 1);
  MultiJet b = a;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1UL) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

MultiJet jet_partial(const MultiJet& a, std::size_t i) {
  if (i < 1 || i > a.n()) throw ShapeError("partial derivative: variable index out of range");
  if (a.order() == 0) throw ShapeError("partial derivative of an order-0 jet");
  BasisPtr lower = make_basis(a.n(), a.order() - 1);
  std::vector<Rational> c(lower->size());
  std::array<int, kMaxVariables> e{};
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a.coeff(k) == 0) continue;
    auto ek = a.basis()->exponents(k);
    if (ek[i - 1] == 0) continue;
    std::copy(ek.begin(), ek.end(), e.begin());
    const int power = e[i - 1]--;
    c[lower->index(std::span<const int>(e.data(), a.n()))] = a.coeff(k) * power;
  }
  return MultiJet(lower, a.base(), std::move(c));
}

MultiJet shift_multiply(const MultiJet& a, std::size_t i, int k) {
  if (i < 1 || i > a.n()) throw ShapeError("variable index out of range");
  const MonomialBasis& basis = *a.basis();
  std::vector<Rational> c(basis.size());
  std::array<int, kMaxVariables> e{};
  const std::size_t limit = basis.count_upto(basis.order() - k);
  for (std::size_t idx = 0; idx < limit; ++idx) {
    if (a.coeff(idx) == 0) continue;
    auto ek = basis.exponents(idx);
    std::copy(ek.begin(), ek.end(), e.begin());
    e[i - 1] += k;
    c[basis.index(std::span<const int>(e.data(), a.n()))] = a.coeff(idx);
  }
  return MultiJet(a.basis(), a.base(), std::move(c));
}

// ---------------------------------------------------------------------------
// UniJet

UniJet::UniJet(Rational center, std::vector<Rational> coeffs) : center_(std::move(center)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ShapeError("a one-variable jet needs at least one coefficient");
}

UniJet UniJet::constant(Rational center, int order, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
  v[0] = c;
  return UniJet(std::move(center), std::move(v));
}

UniJet UniJet::identity(Rational center, int order) {
  std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
  v[0] = center;
  if (order >= 1) v[1] = 1;
  return UniJet(std::move(center), std::move(v));
}

UniJet UniJet::from_polynomial(Rational center, int order, const std::vector<Rational>& poly) {
  // p(center + s) = sum_k s^k sum_{j>=k} p_j C(j,k) center^(j-k)
  std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (poly[j] == 0) continue;
    Integer binom = 1;
    for (std::size_t k = 0; k <= j; ++k) {
      if (k > 0) binom = binom * static_cast<unsigned long>(j - k + 1) / static_cast<unsigned long>(k);
      if (k < v.size()) v[k] += poly[j] * Rational(binom) * rational_pow(center, static_cast<long>(j - k));
    }
  }
  return UniJet(std::move(center), std::move(v));
}

UniJet UniJet::truncate(int order) const {
  if (order > this->order()) throw ShapeError("cannot raise the order of a jet by truncation");
  return UniJet(center_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool UniJet::is_zero() const { return degree() < 0; }

int UniJet::degree() const {
  for (int k = order(); k >= 0; --k)
    if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

std::optional<int> UniJet::valuation() const {
  for (int k = 0; k <= order(); ++k)
    if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
  return std::nullopt;
}

std::vector<Rational> UniJet::to_polynomial() const {
  const int d = std::max(degree(), 0);
  std::vector<Rational> p(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer binom = 1;
    for (int j = 0; j <= k; ++j) {
      if (j > 0) binom = binom * (k - j + 1) / j;
      p[static_cast<std::size_t>(j)] += c * Rational(binom) * rational_pow(-center_, k - j);
    }
  }
  return p;
}

std::string UniJet::dump() const {
  std::ostringstream os;
  for (int k = 0; k <= order(); ++k) {
    if (coeffs_[static_cast<std::size_t>(k)] == 0) continue;
    os << to_string(coeffs_[static_cast<std::size_t>(k)]) << "  " << k << "\n";
  }
  return os.str();
}

namespace {

void require_compatible(const UniJet& a, const UniJet& b, const char* op) {
  if (a.center() != b.center()) throw ShapeError(std::string(op) + ": center mismatch");
  if (a.order() != b.order()) throw ShapeError(std::string(op) + ": truncation order mismatch");
}

}  // namespace

UniJet operator+(const UniJet& a, const UniJet& b) {
  require_compatible(a, b, "uni_add");
  std::vector<Rational> c(a.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
  return UniJet(a.center(), std::move(c));
}

UniJet operator-(const UniJet& a, const UniJet& b) {
  require_compatible(a, b, "uni_sub");
  std::vector<Rational> c(a.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= b[k];
  return UniJet(a.center(), std::move(c));
}

UniJet operator*(const UniJet& a, const UniJet& b) {
  require_compatible(a, b, "uni_mul");
  const std::size_t len = a.coeffs().size();
  std::vector<Rational> c(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j)
      if (b[j] != 0) c[i + j] += a[i] * b[j];
  }
  return UniJet(a.center(), std::move(c));
}

UniJet operator*(const Rational& s, const UniJet& a) {
  std::vector<Rational> c(a.coeffs());
  for (auto& x : c) x *= s;
  return UniJet(a.center(), std::move(c));
}

UniJet uni_derivative(const UniJet& a) {
  if (a.order() == 0) throw ShapeError("derivative of an order-0 jet");
  std::vector<Rational> c(static_cast<std::size_t>(a.order()));
  for (std::size_t k = 1; k <= c.size(); ++k) c[k - 1] = a[k] * static_cast<long>(k);
  return UniJet(a.center(), std::move(c));
}

UniJet uni_integral(const UniJet& a, const Rational& at_center) {
  std::vector<Rational> c(a.coeffs().size() + 1);
  c[0] = at_center;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) c[k + 1] = a[k] / static_cast<long>(k + 1);
  return UniJet(a.center(), std::move(c));
}

UniJet uni_reciprocal(const UniJet& a) {
  const Rational& c = a.value();
  if (c == 0) throw DomainError("reciprocal of a jet vanishing at its center");
  std::vector<Rational> r(a.coeffs().size());
  r[0] = 1 / c;
  for (std::size_t k = 1; k < r.size(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -acc / c;
  }
  return UniJet(a.center(), std::move(r));
}

UniJet uni_compose(const UniJet& outer, const UniJet& inner) {
  if (outer.center() != inner.value()) throw ShapeError("uni_compose: center mismatch");
  const int w = std::min(outer.order(), inner.order());
  std::vector<Rational> s(inner.coeffs().begin(), inner.coeffs().begin() + w + 1);
  s[0] = 0;
  UniJet shifted(inner.center(), std::move(s));
  UniJet acc = UniJet::constant(inner.center(), w, outer[static_cast<std::size_t>(w)]);
  for (int k = w - 1; k >= 0; --k)
    acc = acc * shifted + UniJet::constant(inner.center(), w, outer[static_cast<std::size_t>(k)]);
  return acc;
}

UniJet uni_reversion(const UniJet& g) {
  if (g.order() < 1 || g[1] == 0) throw DomainError("reversion needs a nonzero linear coefficient");
  const int w = g.order();
  const Rational a1 = g[1];
  // r(u) with g(center + r(u)) = value + u. Newton steps double the number of correct terms.
  std::vector<Rational> shifted(g.coeffs());
  shifted[0] = 0;
  const UniJet G(0, shifted);
  const UniJet dG = uni_derivative(G);
  const auto padded = [](const UniJet& a, int m) {
    std::vector<Rational> c(a.coeffs());
    c.resize(static_cast<std::size_t>(m) + 1);
    return UniJet(0, std::move(c));
  };
  UniJet r = (1 / a1) * UniJet::identity(0, 1);
  for (int m = 1; m < w;) {
    m = std::min(2 * m, w);
    r = padded(r, m);
    const UniJet resid = uni_compose(G.truncate(m), r) - UniJet::identity(0, m);
    const UniJet slope = padded(uni_compose(dG.truncate(m - 1), r.truncate(m - 1)), m);
    r = r - resid * uni_reciprocal(slope);
  }
  std::vector<Rational> h(r.coeffs());
  h[0] = g.center();
  return UniJet(g.value(), std::move(h));
}

MultiJet uni_compose(const UniJet& theta, const MultiJet& a) {
  if (theta.center() != a.constant_term()) throw ShapeError("uni_compose: center mismatch");
  const int w = std::min(theta.order(), a.order());
  MultiJet s = a.truncate(w);
  s = s - MultiJet::constant(s.basis(), s.base(), s.constant_term());
  MultiJet acc = MultiJet::constant(s.basis(), s.base(), theta[static_cast<std::size_t>(w)]);
  for (int k = w - 1; k >= 0; --k) {
    acc = acc * s;
    std::vector<Rational> c(acc.coeffs());
    c[0] += theta[static_cast<std::size_t>(k)];
    acc = MultiJet(acc.basis(), acc.base(), std::move(c));
  }
  return acc;
}

MultiJet substitute_diagonal(const MultiJet& a, const std::vector<UniJet>& g) {
  const std::size_t n = a.n();
  if (g.size() != n) throw ShapeError("substitute_diagonal: expected one series per variable");
  int w = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i].value() != a.base()[i]) throw ShapeError("substitute_diagonal: series value does not match base");
    if (g[i].order() < 1 || g[i][1] == 0)
      throw DomainError("substitute_diagonal: non-invertible change of variable x" + std::to_string(i + 1));
    w = std::min(w, g[i].order());
  }
  BasisPtr basis = w == a.order() ? a.basis() : make_basis(n, w);
  std::vector<Rational> cur(a.coeffs().begin(), a.coeffs().begin() + static_cast<long>(basis->size()));
  Point base = a.base();
  std::array<int, kMaxVariables> e{};
  // One variable at a time: a = sum_k A_k(other vars) s_i^k  ->  sum_k A_k (g_i - b_i)^k.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<UniJet> powers;
    std::vector<Rational> shifted(g[i].coeffs().begin(), g[i].coeffs().begin() + w + 1);
    shifted[0] = 0;
    UniJet p(g[i].center(), shifted);
    powers.push_back(UniJet::constant(g[i].center(), w, 1));
    for (int k = 1; k <= w; ++k) powers.push_back(powers.back() * p);
    std::vector<Rational> next(basis->size());
    for (std::size_t idx = 0; idx < basis->size(); ++idx) {
      if (cur[idx] == 0) continue;
      auto ek = basis->exponents(idx);
      std::copy(ek.begin(), ek.end(), e.begin());
      const int k = e[i];
      const int rest = basis->degree(idx) - k;
      const UniJet& pk = powers[static_cast<std::size_t>(k)];
      for (int j = k; j + rest <= w; ++j) {
        if (pk[static_cast<std::size_t>(j)] == 0) continue;
        e[i] = j;
        next[basis->index(std::span<const int>(e.data(), n))] += cur[idx] * pk[static_cast<std::size_t>(j)];
      }
    }
    cur = std::move(next);
    base[i] = g[i].center();
  }
  return MultiJet(basis, std::move(base), std::move(cur));
}

MultiJet embed(const UniJet& u, std::size_t i, const BasisPtr& basis, const Point& base) {
  if (i < 1 || i > basis->n()) throw ShapeError("embed: variable index out of range");
  if (u.center() != base[i - 1]) throw ShapeError("embed: center does not match base point");
  if (u.order() < basis->order()) throw ShapeError("embed: one-variable jet has too low an order");
  MultiJet j(basis, base);
  std::vector<Rational> c(basis->size());
  Exponents e(basis->n(), 0);
  for (int k = 0; k <= basis->order(); ++k) {
    e[i - 1] = k;
    c[basis->index(e)] = u[static_cast<std::size_t>(k)];
  }
  return MultiJet(basis, base, std::move(c));
}

UniJet restrict_to_axis(const MultiJet& a, std::size_t i) {
  if (i < 1 || i > a.n()) throw ShapeError("restrict_to_axis: variable index out of range");
  std::vector<Rational> c(static_cast<std::size_t>(a.order()) + 1);
  Exponents e(a.n(), 0);
  for (int k = 0; k <= a.order(); ++k) {
    e[i - 1] = k;
    c[static_cast<std::size_t>(k)] = a.coeff(e);
  }
  return UniJet(a.base()[i - 1], std::move(c));
}

namespace series {

UniJet exp_at_zero(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  Rational f = 1;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) f /= static_cast<long>(k);
    c[k] = f;
  }
  return UniJet(0, std::move(c));
}

UniJet log1p_at_zero(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = Rational(k % 2 ? 1 : -1) / static_cast<long>(k);
  return UniJet(0, std::move(c));
}

UniJet expm1_at_zero(int order) {
  auto e = exp_at_zero(order);
  std::vector<Rational> c(e.coeffs());
  c[0] = 0;
  return UniJet(0, std::move(c));
}

}  // namespace series

}  // namespace webiso
