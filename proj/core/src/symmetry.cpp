#include "webiso/symmetry.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "webiso/error.hpp"

namespace webiso {

using linalg::Matrix;
using linalg::Vector;

struct WebSpec::Cache {
  std::mutex mutex;
  std::optional<MultiJet> jet;
};

WebSpec::WebSpec(std::size_t n, Expression f, Point base, int order)
    : n_(n), f_(std::move(f)), base_(std::move(base)), order_(order), cache_(std::make_shared<Cache>()) {
  if (n_ < 2) throw InvalidWebError("a web needs n >= 2 coordinates");
  if (base_.size() != n_)
    throw InvalidWebError("base point has " + std::to_string(base_.size()) + " coordinates, expected " + std::to_string(n_));
  if (f_.max_variable() > n_) throw InvalidWebError("f uses x" + std::to_string(f_.max_variable()) + " but n = " + std::to_string(n_));
  if (order_ < 2) throw InvalidWebError("working order must be at least 2");
}

WebSpec WebSpec::with_order(int order) const {
  WebSpec w = *this;
  w.order_ = order;
  return w;
}

MultiJet WebSpec::jet(int order) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (cache_->jet && cache_->jet->order() >= order) return cache_->jet->truncate(order);
  cache_->jet = expand_to_jet(f_, base_, order);
  return *cache_->jet;
}

ValidationReport validate_web(const WebSpec& w) {
  ValidationReport r;
  MultiJet j = [&] {
    try {
      return w.jet(1);
    } catch (const DomainError& e) {
      r.message = std::string("f cannot be expanded at the base point: ") + e.what();
      return MultiJet(make_basis(w.n(), 0), w.base());
    }
  }();
  if (!r.message.empty()) return r;
  r.value = j.constant_term();
  for (std::size_t i = 1; i <= w.n(); ++i) {
    Exponents e(w.n(), 0);
    e[i - 1] = 1;
    r.partials.push_back(j.coeff(e));
    if (r.partials.back() == 0) r.vanishing.push_back(i);
  }
  r.valid = r.vanishing.empty();
  if (!r.valid) {
    r.message = "partial derivative";
    if (r.vanishing.size() > 1) r.message += "s";
    for (std::size_t k = 0; k < r.vanishing.size(); ++k)
      r.message += (k ? ", " : " ") + std::string("df/dx") + std::to_string(r.vanishing[k]);
    r.message += r.vanishing.size() > 1 ? " vanish at the base point" : " vanishes at the base point";
  }
  return r;
}

ValidationReport require_valid(const WebSpec& w) {
  ValidationReport r = validate_web(w);
  if (!r.valid) throw InvalidWebError(r.message);
  return r;
}

DiagonalField field_from_polynomials(const std::vector<std::vector<Rational>>& polys, const Point& base, int order) {
  if (polys.size() != base.size()) throw ShapeError("field has " + std::to_string(polys.size()) + " components, expected " + std::to_string(base.size()));
  DiagonalField x;
  for (std::size_t i = 0; i < polys.size(); ++i) x.components.push_back(UniJet::from_polynomial(base[i], order, polys[i]));
  return x;
}

std::vector<std::vector<Rational>> field_to_polynomials(const DiagonalField& x) {
  std::vector<std::vector<Rational>> out;
  for (const auto& c : x.components) {
    auto p = c.to_polynomial();
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    out.push_back(std::move(p));
  }
  return out;
}

DiagonalField field_at_order(const DiagonalField& x, int order) {
  DiagonalField out;
  for (const auto& c : x.components) {
    if (c.order() >= order) {
      out.components.push_back(c.truncate(order));
    } else {
      std::vector<Rational> v(c.coeffs());
      v.resize(static_cast<std::size_t>(order) + 1);
      out.components.emplace_back(c.center(), std::move(v));
    }
  }
  return out;
}

MultiJet apply_field(const DiagonalField& x, const MultiJet& a) {
  if (x.n() != a.n()) throw ShapeError("apply_field: dimension mismatch");
  if (a.order() < 1) throw ShapeError("apply_field needs a jet of order >= 1");
  const int w = a.order() - 1;
  BasisPtr basis = make_basis(a.n(), w);
  MultiJet out(basis, a.base());
  DiagonalField xw = field_at_order(x, w);
  for (std::size_t i = 1; i <= a.n(); ++i) {
    if (xw.components[i - 1].is_zero()) continue;
    out = out + embed(xw.components[i - 1], i, basis, a.base()) * jet_partial(a, i);
  }
  return out;
}

SymmetryCertificate is_symmetry(const DiagonalField& x, const WebSpec& w, const SymmetryCheckOptions& opts) {
  const std::size_t n = w.n();
  if (x.n() != n) throw ShapeError("field has " + std::to_string(x.n()) + " components, web has n = " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (x.components[i].center() != w.base()[i]) throw ShapeError("field component centers do not match the base point");
  SymmetryCertificate cert;
  int k = opts.order.value_or(w.order() - 2);
  int field_degree = 0;
  for (const auto& c : x.components) field_degree = std::max(field_degree, c.degree());
  if (auto form = rational_exp_form(w.f(), n)) {
    cert.exact_bound = residual_degree_bound(*form, field_degree);
    if (opts.upgrade_to_exact && *cert.exact_bound > k) {
      // monomials of degree <= bound + 2 in n variables
      mpz_class count;
      mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(*cert.exact_bound + 2) + n, n);
      if (count <= opts.max_upgrade_monomials) k = *cert.exact_bound;
    }
  }
  cert.checked_order = k;
  cert.exact = cert.exact_bound && k >= *cert.exact_bound;

  const MultiJet f = w.jet(k + 2);
  const MultiJet xf = apply_field(x, f);  // order k + 1
  std::vector<MultiJet> df, dxf;
  for (std::size_t i = 1; i <= n; ++i) {
    df.push_back(jet_partial(f, i).truncate(k));
    dxf.push_back(jet_partial(xf, i));
  }
  cert.holds = true;
  for (std::size_t p = 0; p < n && cert.holds; ++p)
    for (std::size_t q = p + 1; q < n && cert.holds; ++q) {
      MultiJet r = dxf[p] * df[q] - dxf[q] * df[p];
      if (auto idx = r.first_nonzero_upto(k)) {
        cert.holds = false;
        cert.failing_pair = std::make_pair(p + 1, q + 1);
        auto e = r.basis()->exponents(*idx);
        cert.failing_monomial.assign(e.begin(), e.end());
        cert.failing_coefficient = r.coeff(*idx);
      }
    }
  if (!cert.holds) cert.exact = cert.exact_bound.has_value() && cert.exact;
  return cert;
}

UniJet induced_phi(const DiagonalField& x, const WebSpec& w) {
  const int order = w.order();
  const MultiJet f = w.jet(order);
  const MultiJet xf = apply_field(x, f);  // order W - 1
  const UniJet along = restrict_to_axis(f, 1);
  const UniJet image = restrict_to_axis(xf, 1);
  const UniJet phi = uni_compose(image, uni_reversion(along).truncate(order - 1));
  const MultiJet check = uni_compose(phi, f.truncate(order - 1)).truncate(order - 2);
  if (check != xf.truncate(order - 2))
    throw ConsistencyAlarm("induced phi does not satisfy X.f = phi(f) to order " + std::to_string(order - 2) +
                           "; the field is not a symmetry at this order");
  return phi;
}

// ---------------------------------------------------------------------------
// Solver

namespace {

// Kernel of a growing sparse system, maintained directly as a basis.
class KernelTracker {
 public:
  explicit KernelTracker(std::size_t unknowns) : unknowns_(unknowns) {}

  void activate(std::size_t column) {
    Vector v(unknowns_);
    v[column] = 1;
    basis_.push_back(std::move(v));
  }

  void add_equation(const std::vector<std::pair<std::size_t, Rational>>& row) {
    if (row.empty() || basis_.empty()) return;
    std::vector<Rational> dots(basis_.size());
    std::size_t pivot = basis_.size();
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      for (const auto& [col, val] : row)
        if (basis_[j][col] != 0) dots[j] += val * basis_[j][col];
      if (pivot == basis_.size() && dots[j] != 0) pivot = j;
    }
    if (pivot == basis_.size()) return;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      if (j == pivot || dots[j] == 0) continue;
      basis_[j] = linalg::axpy(basis_[j], -dots[j] / dots[pivot], basis_[pivot]);
    }
    basis_.erase(basis_.begin() + static_cast<long>(pivot));
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

 private:
  std::size_t unknowns_;
  std::vector<Vector> basis_;
};

}  // namespace

SymmetrySolution solve_symmetries(const WebSpec& w, const SolverOptions& opts) {
  require_valid(w);
  const std::size_t n = w.n();
  const int order = w.order();
  if (order < 4) throw ShapeError("solve_symmetries needs working order >= 4");
  const int cap = opts.degree_cap.value_or(order - 1);
  if (cap < 1 || cap > order - 1) throw ShapeError("degree cap must lie in [1, W - 1]");
  const int top = order - 2;  // equations up to this degree

  const MultiJet f = w.jet(order);
  std::vector<MultiJet> d1;
  for (std::size_t i = 1; i <= n; ++i) d1.push_back(jet_partial(f, i));
  std::vector<std::vector<MultiJet>> d2(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d2[i].push_back(j < i ? d2[j][i] : jet_partial(d1[i], j + 1));
  std::vector<MultiJet> d1t;
  for (const auto& d : d1) d1t.push_back(d.truncate(top));

  // Pairs (1, q): since df/dx1 is a unit, they generate all pairwise conditions.
  // a[i][q] = d1 di f * dq f - dq di f * d1 f ;  b[q] = d1 f * dq f
  std::vector<std::vector<MultiJet>> a(n);
  std::vector<MultiJet> b;
  for (std::size_t q = 0; q < n; ++q) b.push_back(d1t[0] * d1t[q]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < n; ++q)
      a[i].push_back(q == 0 ? MultiJet(d1t[0].basis(), w.base()) : d2[i][0] * d1t[q] - d2[i][q] * d1t[0]);

  const BasisPtr basis = d1t[0].basis();
  const std::size_t unknowns = n * static_cast<std::size_t>(cap + 1);
  auto column = [n](std::size_t i, int k) { return static_cast<std::size_t>(k) * n + i; };
  KernelTracker kernel(unknowns);
  SymmetrySolution sol;
  sol.order = order;
  sol.degree_cap = cap;
  std::vector<int> shifted(n);
  for (int k = 0; k <= std::min(1, cap); ++k)
    for (std::size_t i = 0; i < n; ++i) kernel.activate(column(i, k));

  std::size_t idx = 0;
  for (int d = 0; d <= top; ++d) {
    if (d >= 1 && d + 1 <= cap)
      for (std::size_t i = 0; i < n; ++i) kernel.activate(column(i, d + 1));
    const std::size_t end = basis->count_upto(d);
    for (; idx < end; ++idx) {
      auto alpha = basis->exponents(idx);
      for (std::size_t q = 1; q < n; ++q) {
        std::vector<std::pair<std::size_t, Rational>> row;
        for (std::size_t i = 0; i < n; ++i) {
          const int kmax = std::min(cap, alpha[i] + 1);
          for (int k = 0; k <= kmax; ++k) {
            Rational v = 0;
            std::copy(alpha.begin(), alpha.end(), shifted.begin());
            if (k <= alpha[i]) {
              shifted[i] = alpha[i] - k;
              v += a[i][q].coeff(basis->index(shifted));
            }
            if (k >= 1 && (i == 0 || i == q)) {
              shifted[i] = alpha[i] - (k - 1);
              const Rational& bv = b[q].coeff(basis->index(shifted));
              if (bv != 0) v += (i == 0 ? k : -k) * bv;
            }
            if (v != 0) row.emplace_back(column(i, k), std::move(v));
          }
        }
        kernel.add_equation(row);
      }
    }
    if (d >= 3) sol.dims_by_order.emplace_back(d, static_cast<int>(kernel.dim()));
  }
  const std::size_t win = static_cast<std::size_t>(std::max(opts.stabilization_window, 1));
  if (sol.dims_by_order.size() >= win) {
    sol.stabilized = true;
    for (std::size_t k = sol.dims_by_order.size() - win; k < sol.dims_by_order.size(); ++k)
      sol.stabilized &= sol.dims_by_order[k].second == sol.dims_by_order.back().second;
  }

  for (const auto& v : linalg::span_basis(kernel.basis(), unknowns)) {
    DiagonalField x;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> c(static_cast<std::size_t>(cap) + 1);
      for (int k = 0; k <= cap; ++k) c[static_cast<std::size_t>(k)] = v[column(i, k)];
      x.components.emplace_back(w.base()[i], std::move(c));
    }
    sol.basis.push_back(std::move(x));
  }

  // Bracket closure two orders below the component order.
  sol.closure_order = std::max(cap - 2, 0);
  sol.closed = true;
  if (cap >= 2) {
    std::vector<Vector> flat;
    for (const auto& x : sol.basis) flat.push_back(x.truncate(sol.closure_order).flatten());
    for (std::size_t r = 0; r < sol.basis.size() && sol.closed; ++r)
      for (std::size_t s = r + 1; s < sol.basis.size() && sol.closed; ++s) {
        Vector br = field_bracket(sol.basis[r], sol.basis[s]).truncate(sol.closure_order).flatten();
        if (!linalg::coordinates(flat, br)) {
          sol.closed = false;
          sol.closure_failure = "[X" + std::to_string(r + 1) + ", X" + std::to_string(s + 1) + "] is outside the span";
        }
      }
  }
  return sol;
}

std::size_t orbit_rank(const std::vector<DiagonalField>& basis) {
  if (basis.empty()) return 0;
  std::vector<Vector> rows;
  for (const auto& x : basis) rows.push_back(x.at_base());
  return linalg::rank(Matrix::from_rows(rows, basis.front().n()));
}

std::vector<Vector> vanishing_combinations(const std::vector<DiagonalField>& basis) {
  if (basis.empty()) return {};
  const std::size_t n = basis.front().n();
  Matrix m(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = basis[j].components[i].value();
  return linalg::nullspace(m);
}

}  // namespace webiso
