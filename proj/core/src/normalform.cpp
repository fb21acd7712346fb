#include "webiso/normalform.hpp"

#include "webiso/error.hpp"

namespace webiso {

namespace {

// Multinomial coefficient k! / prod(alpha_i!).
Rational multinomial(std::span<const int> alpha) {
  Integer num = 1, den = 1;
  int k = 0;
  for (int a : alpha) {
    for (int j = 1; j <= a; ++j) {
      ++k;
      num *= k;
      den *= j;
    }
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_pure(std::span<const int> alpha) {
  int nonzero = 0;
  for (int a : alpha) nonzero += a != 0;
  return nonzero <= 1;
}

UniJet poly_series(const Rational& center, int order, const Rational& value, const Rational& linear, int k,
                   const Rational& coeff) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = value;
  if (order >= 1) c[1] = linear;
  if (k <= order) c[static_cast<std::size_t>(k)] += coeff;
  return UniJet(center, std::move(c));
}

}  // namespace

NormalFormResult compute_normal_form(const WebSpec& w) {
  const ValidationReport v = require_valid(w);
  const std::size_t n = w.n();
  const int order = w.order();
  const MultiJet f = w.jet(order);

  std::vector<UniJet> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(poly_series(0, order, w.base()[i], 1 / v.partials[i], 0, 0));
  UniJet theta = poly_series(v.value, order, 0, 1, 0, 0);
  MultiJet cur = uni_compose(theta, substitute_diagonal(f, g));
  const BasisPtr basis = cur.basis();

  for (int k = 2; k <= order; ++k) {
    Rational rm = 0, mm = 0;
    const std::size_t lo = basis->count_upto(k - 1), hi = basis->count_upto(k);
    for (std::size_t idx = lo; idx < hi; ++idx) {
      auto alpha = basis->exponents(idx);
      if (is_pure(alpha)) continue;
      const Rational m = multinomial(alpha);
      rm += cur.coeff(idx) * m;
      mm += m * m;
    }
    const Rational q = mm == 0 ? Rational(0) : Rational(rm / mm);
    // theta_k(s) = s - q s^k
    if (q != 0) {
      cur = cur - q * power(cur, k);
      theta = uni_compose(poly_series(0, order, 0, 1, k, -q), theta);
    }
    // g_i^k(t) = t - p_i t^k with p_i the remaining pure coefficient
    std::vector<UniJet> step;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      Exponents e(n, 0);
      e[i] = k;
      const Rational p = cur.coeff(e);
      any |= p != 0;
      step.push_back(poly_series(0, order, 0, 1, k, -p));
    }
    if (any) {
      cur = substitute_diagonal(cur, step);
      for (std::size_t i = 0; i < n; ++i) g[i] = uni_compose(g[i], step[i]);
    }
  }
  NormalFormResult r{cur, std::move(g), std::move(theta), {}, order, order};

  r.a_quadratic.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Exponents e(n, 0);
      e[i] = e[j] = 1;
      r.a_quadratic[i][j] = r.nf.coeff(e);
    }
  for (std::size_t idx = basis->count_upto(1); idx < basis->size(); ++idx)
    if (r.nf.coeff(idx) != 0) {
      r.linear_to_order = basis->degree(idx) - 1;
      break;
    }
  if (auto bad = normal_form_violation(r, w)) throw ConsistencyAlarm("normal form: " + *bad);
  return r;
}

std::optional<std::string> normal_form_violation(const NormalFormResult& r, const WebSpec& w) {
  const std::size_t n = w.n();
  const BasisPtr basis = r.nf.basis();
  if (r.nf.constant_term() != 0) return "nonzero constant term";
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    if (r.nf.coeff(e) != 1) return "linear part is not x1 + ... + xn";
  }
  for (std::size_t idx = basis->count_upto(1); idx < basis->size(); ++idx)
    if (r.nf.coeff(idx) != 0 && is_pure(basis->exponents(idx))) return "pure monomial of degree " + std::to_string(basis->degree(idx));
  Rational sum = 0;
  for (const auto& row : r.a_quadratic)
    for (const auto& a : row) sum += a;
  if (sum != 0) return "sum of a_ij(0) is " + to_string(sum) + ", not 0";
  const MultiJet rebuilt = uni_compose(r.theta, substitute_diagonal(w.jet(r.order), r.g));
  if (rebuilt != r.nf) return "theta o f o g does not reproduce the normal form";
  return std::nullopt;
}

HomothetyReport homothety_uniqueness_check(const WebSpec& w, const Rational& lambda) {
  if (lambda == 0) throw DomainError("homothety ratio must be nonzero");
  HomothetyReport rep;
  rep.lambda = lambda;
  rep.order = w.order();
  std::vector<Expression> scaled;
  for (std::size_t i = 0; i < w.n(); ++i) {
    const Expression b = Expression::constant(w.base()[i]);
    scaled.push_back(b + Expression::constant(lambda) * (Expression::var(i + 1) - b));
  }
  const Expression g = substitute(w.f(), scaled) / Expression::constant(lambda);
  const WebSpec rescaled(w.n(), g, w.base(), w.order());
  if (!validate_web(rescaled).valid) throw InvalidWebError("rescaled web is invalid");
  const NormalFormResult a = compute_normal_form(w);
  const NormalFormResult b = compute_normal_form(rescaled);
  const BasisPtr basis = a.nf.basis();
  rep.holds = true;
  for (std::size_t idx = 0; idx < basis->size() && rep.holds; ++idx) {
    const Rational expected = a.nf.coeff(idx) * rational_pow(lambda, basis->degree(idx) - 1);
    if (b.nf.coeff(idx) != expected) {
      rep.holds = false;
      rep.detail = "coefficient " + std::to_string(idx) + " of degree " + std::to_string(basis->degree(idx)) + ": got " +
                   to_string(b.nf.coeff(idx)) + ", expected " + to_string(expected);
    }
  }
  return rep;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Parallelizable:
      return "parallelizable-to-order-W";
    case Verdict::NotParallelizable:
      return "not parallelizable";
    default:
      return "inconsistent";
  }
}

ParallelizabilityReport parallelizability_test(const WebSpec& w, const SymmetrySolution& sol, const NormalFormResult& nf) {
  ParallelizabilityReport rep;
  rep.order = w.order();
  rep.vanishing_dim = vanishing_combinations(sol.basis).size();
  rep.symmetry_branch = rep.vanishing_dim > 0;
  rep.symmetry_stabilized = sol.stabilized;
  rep.linear_to_order = nf.linear_to_order;
  rep.normal_form_branch = nf.linear_to_order >= nf.order;
  if (rep.symmetry_branch == rep.normal_form_branch)
    rep.verdict = rep.symmetry_branch ? Verdict::Parallelizable : Verdict::NotParallelizable;
  else
    rep.verdict = Verdict::Inconsistent;
  return rep;
}

ParallelizabilityReport parallelizability_test(const WebSpec& w) {
  return parallelizability_test(w, solve_symmetries(w), compute_normal_form(w));
}

}  // namespace webiso
