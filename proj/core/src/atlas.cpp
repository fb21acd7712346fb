#include "webiso/atlas.hpp"

#include <algorithm>
#include <map>

#include "webiso/error.hpp"

namespace webiso {

std::string to_string(Status s) {
  switch (s) {
    case Status::Confirmed:
      return "confirmed";
    case Status::Discrepancy:
      return "discrepancy";
    default:
      return "computed-only";
  }
}

namespace {

using Poly = std::vector<Rational>;

Expression x(std::size_t i) { return Expression::var(i); }
Expression k(const Rational& q) { return Expression::constant(q); }

// Diagonal field given as component polynomials, zero components omitted.
std::vector<Poly> components(std::size_t n, const std::map<std::size_t, Poly>& nonzero) {
  std::vector<Poly> out(n, Poly{0});
  for (const auto& [i, p] : nonzero) out[i - 1] = p;
  return out;
}

GeneratorClaim gen(std::string name, std::size_t n, const std::map<std::size_t, Poly>& nonzero,
                   std::optional<Poly> phi = std::nullopt) {
  return {std::move(name), components(n, nonzero), std::move(phi)};
}

const Poly kZero{0}, kOne{1}, kIdentity{0, 1}, kSquare{0, 0, 1};

// sum d/dx_i, sum (x_i + c_i) d/dx_i, sum (x_i + c_i)^2 d/dx_i over i = 1..n
std::vector<GeneratorClaim> moebius(std::size_t n, const std::vector<Rational>& c, std::optional<std::vector<Poly>> phis) {
  std::map<std::size_t, Poly> f, h, e;
  for (std::size_t i = 1; i <= n; ++i) {
    f[i] = {1};
    h[i] = {c[i - 1], 1};
    e[i] = {c[i - 1] * c[i - 1], 2 * c[i - 1], 1};
  }
  auto phi = [&](std::size_t j) { return phis ? std::optional<Poly>((*phis)[j]) : std::nullopt; };
  return {gen("F", n, f, phi(0)), gen("H", n, h, phi(1)), gen("E", n, e, phi(2))};
}

Expression parse(const std::string& text, std::size_t n) { return parse_expression(text, n); }

// ---------------------------------------------------------------------------
// sl(2) construction helpers

void check_group(const Sl2Group& g, std::size_t n) {
  if (g.others.size() != g.c.size()) throw ShapeError("sl(2) group: one constant per extra variable is required");
  auto in_range = [&](std::size_t i) { return i >= 1 && i <= n; };
  if (!in_range(g.first) || !in_range(g.second) || g.first == g.second)
    throw ShapeError("sl(2) group: invalid first/second variable");
  for (auto j : g.others)
    if (!in_range(j) || j == g.first || j == g.second) throw ShapeError("sl(2) group: invalid variable x" + std::to_string(j));
}

std::string monomial_text(std::span<const int> e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) s += (s.empty() ? "" : "*") + std::string("y") + std::to_string(i + 1) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  return s.empty() ? "1" : s;
}

// rhs - sum_j q_j(y_j) dh/dy_j over the h-variables `vars` (0-based) with constants `c`.
void check_pde(const MultiJet& hj, const std::vector<std::size_t>& vars, const std::vector<Rational>& c, bool transverse,
               const std::string& label) {
  const int w = hj.order() - 1;
  const BasisPtr basis = make_basis(hj.n(), w);
  const MultiJet h = hj.truncate(basis);
  MultiJet residual = transverse ? h * h - h : MultiJet(basis, hj.base());
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const std::size_t v = vars[k];
    // (y + c)^2 - (y + c)
    const UniJet q = UniJet::from_polynomial(hj.base()[v], w, {c[k] * c[k] - c[k], 2 * c[k] - 1, 1});
    residual = residual - embed(q, v + 1, basis, hj.base()) * jet_partial(hj, v + 1);
  }
  if (auto idx = residual.first_nonzero_upto(w)) {
    throw DomainError("h does not satisfy the " + label + " equation: residual coefficient " + to_string(residual.coeff(*idx)) +
                      " at monomial " + monomial_text(basis->exponents(*idx)) + " (centered at the base point)");
  }
}

}  // namespace

Expression group_theta(const Sl2Group& g, std::size_t kk) {
  const Expression a = x(g.first), b = x(g.second);
  return (x(g.others[kk]) - a - k(g.c[kk]) * (b - a)) / (k(1) + b - a);
}

std::vector<GeneratorClaim> group_generators(const Sl2Group& g, std::size_t n, bool transverse) {
  std::map<std::size_t, Poly> f, h, e;
  auto add = [&](std::size_t i, const Rational& c) {
    f[i] = {1};
    h[i] = {c, 1};
    e[i] = {c * c, 2 * c, 1};
  };
  add(g.first, 0);
  add(g.second, 1);
  for (std::size_t kk = 0; kk < g.others.size(); ++kk) add(g.others[kk], g.c[kk]);
  const std::string tag = "(x" + std::to_string(g.first) + ")";
  if (transverse) return {gen("F" + tag, n, f, kOne), gen("H" + tag, n, h, kIdentity), gen("E" + tag, n, e, kSquare)};
  return {gen("F" + tag, n, f, kZero), gen("H" + tag, n, h, kZero), gen("E" + tag, n, e, kZero)};
}

BuiltWeb build_sl2_web(const Expression& h, const std::optional<Sl2Group>& transverse, const std::vector<Sl2Group>& tangent,
                       std::size_t n, const Point& base, int order) {
  if (base.size() != n) throw ShapeError("base point has the wrong number of coordinates");
  if (order < 2) throw ShapeError("builder order must be at least 2");
  std::vector<const Sl2Group*> groups;
  if (transverse) groups.push_back(&*transverse);
  for (const auto& g : tangent) groups.push_back(&g);
  if (groups.empty()) throw ShapeError("at least one sl(2) group is required");
  if (transverse && transverse->others.empty()) throw DomainError("the transverse group needs at least one extra variable");
  for (const auto& g : tangent)
    if (g.others.size() < 2)
      throw DomainError("a tangent group needs p > 3 variables: with three, F.f = H.f = E.f = 0 makes f independent of all of them");
  std::vector<bool> taken(n + 1, false);
  for (const auto* g : groups) {
    check_group(*g, n);
    for (auto i : {g->first, g->second}) {
      if (taken[i]) throw ShapeError("sl(2) groups overlap at x" + std::to_string(i));
      taken[i] = true;
    }
    for (auto i : g->others) {
      if (taken[i]) throw ShapeError("sl(2) groups overlap at x" + std::to_string(i));
      taken[i] = true;
    }
  }

  // Arguments of h and their values at the base point.
  std::vector<Expression> args;
  std::vector<std::vector<std::size_t>> group_vars;
  for (const auto* g : groups) {
    group_vars.emplace_back();
    for (std::size_t kk = 0; kk < g->others.size(); ++kk) {
      group_vars.back().push_back(args.size());
      args.push_back(group_theta(*g, kk));
    }
  }
  for (std::size_t i = 1; i <= n; ++i)
    if (!taken[i]) args.push_back(x(i));
  if (h.max_variable() > args.size())
    throw ShapeError("h uses y" + std::to_string(h.max_variable()) + " but takes " + std::to_string(args.size()) + " arguments");
  Point hbase;
  for (const auto& a : args) hbase.push_back(evaluate(a, base));

  const MultiJet hj = expand_to_jet(h, hbase, order + 1);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const bool tr = transverse && gi == 0;
    check_pde(hj, group_vars[gi], groups[gi]->c, tr, tr ? "transverse" : "tangent");
  }

  BuiltWeb out{substitute(h, args), {}};
  if (transverse) {
    const Expression a = x(transverse->first), b = x(transverse->second);
    out.f = a + (k(1) + b - a) * out.f;
  }
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    auto g = group_generators(*groups[gi], n, transverse && gi == 0);
    out.generators.insert(out.generators.end(), g.begin(), g.end());
  }

  const WebSpec w(n, out.f, base, order);
  require_valid(w);
  const MultiJet fj = w.jet(order);
  const MultiJet low = fj.truncate(order - 1);
  for (const auto& g : out.generators) {
    const MultiJet xf = apply_field(field_from_polynomials(g.components, base, order), fj);
    const MultiJet expected = uni_compose(UniJet::from_polynomial(fj.constant_term(), order - 1, *g.phi), low);
    if (xf != expected) throw ConsistencyAlarm("built web: relation for " + g.name + " fails at order " + std::to_string(order - 1));
  }
  return out;
}

BuiltWeb build_f_l1(const Expression& h, const std::vector<Rational>& c, std::size_t n, std::size_t p, const Point& base,
                    int order) {
  if (p < 3 || p > n) throw DomainError("build_f_l1 needs 3 <= p <= n");
  if (c.size() != p - 2) throw ShapeError("build_f_l1 needs constants c_3..c_p");
  Sl2Group g;
  for (std::size_t j = 3; j <= p; ++j) g.others.push_back(j);
  g.c = c;
  return build_sl2_web(h, g, {}, n, base, order);
}

BuiltWeb build_f_l2(const Expression& h, const std::vector<Rational>& c, std::size_t n, std::size_t p, const Point& base,
                    int order) {
  if (p <= 3) throw DomainError("build_f_l2 needs p > 3: with p = 3 the relations force f to be independent of x1, x2 and x3");
  if (p > n) throw DomainError("build_f_l2 needs p <= n");
  if (c.size() != p - 2) throw ShapeError("build_f_l2 needs constants c_3..c_p");
  Sl2Group g;
  for (std::size_t j = 3; j <= p; ++j) g.others.push_back(j);
  g.c = c;
  return build_sl2_web(h, std::nullopt, {g}, n, base, order);
}

// ---------------------------------------------------------------------------
// catalogue

namespace {

std::vector<AtlasEntry> build_catalogue() {
  std::vector<AtlasEntry> out;
  auto add = [&](std::string id, std::size_t n, Expression f, Point base, Claim claim, std::string source,
                 std::string representative = "", int order = 8) {
    AtlasEntry e;
    e.id = std::move(id);
    e.n = n;
    e.f = std::move(f);
    e.base = std::move(base);
    e.order = order;
    e.claimed = std::move(claim);
    e.claim_source = std::move(source);
    e.representative = std::move(representative);
    out.push_back(std::move(e));
  };
  auto claim = [](std::size_t dim, std::size_t S, std::size_t N, std::size_t C, std::vector<std::string> profile,
                  std::vector<GeneratorClaim> gens) {
    Claim c;
    c.dim = dim;
    c.S = S;
    c.N = N;
    c.C = C;
    c.profile = std::move(profile);
    c.generators = std::move(gens);
    return c;
  };
  const Point o3(3, 0), o4(4, 0);

  {
    Claim c;
    c.dim = 4;
    c.parallelizable = true;
    c.generators = {gen("Z1", 3, {{1, kOne}}, kOne), gen("Z2", 3, {{2, kOne}}, kOne), gen("Z3", 3, {{3, kOne}}, kOne),
                    gen("D", 3, {{1, kIdentity}, {2, kIdentity}, {3, kIdentity}}, kIdentity)};
    add("parallelizable-n3", 3, parse("x1+x2+x3", 3), o3, c, "parallelizable webs have an algebra of dimension n + 1");
  }
  {
    Claim c;
    c.dim = 4;
    c.parallelizable = true;
    c.generators = {gen("R1", 3, {{1, {1, 1}}}, Poly{1, 1}), gen("R2", 3, {{2, {1, 1}}}, Poly{1, 1}),
                    gen("R3", 3, {{3, {1, 1}}}, Poly{1, 1})};
    add("parallelizable-product-n3", 3, parse("(1+x1)*(1+x2)*(1+x3)-1", 3), o3, c,
        "parallelizable webs have an algebra of dimension n + 1");
  }

  // commutative algebras
  add("commutative-n3-m1-x", 3, parse("x1+2*x2+x3+x2*x3^2+x2^3*x3", 3), o3,
      claim(1, 0, 0, 1, {"abelian transverse"}, {gen("Z1", 3, {{1, kOne}}, kOne)}),
      "dimension 3, commutative of dimension 1 generated by d/dx: f = x + g(y, z)", "g(y, z) = 2y + z + y z^2 + y^3 z");
  add("commutative-n3-m1-xy", 3, parse("x1+2*(x2-x1)+x3+(x2-x1)*x3^2+(x2-x1)^3*x3", 3), o3,
      claim(1, 0, 0, 1, {"abelian transverse"}, {gen("Z12", 3, {{1, kOne}, {2, kOne}}, kOne)}),
      "dimension 3, commutative of dimension 1 generated by d/dx + d/dy: f = ax + g(y - x, z), a = 1",
      "g(u, z) = 2u + z + u z^2 + u^3 z");
  add("commutative-n3-m1-xyz", 3, parse("x1+2*(x2-x1)+(x3-x1)+(x2-x1)*(x3-x1)^2+(x2-x1)^3*(x3-x1)", 3), o3,
      claim(1, 0, 0, 1, {"abelian transverse"}, {gen("Z123", 3, {{1, kOne}, {2, kOne}, {3, kOne}}, kOne)}),
      "dimension 3, commutative of dimension 1 generated by d/dx + d/dy + d/dz: f = ax + g(y - x, z - x), a = 1",
      "g(u, v) = 2u + v + u v^2 + u^3 v");
  add("commutative-n3-m2", 3, parse("x1+(x2-x3)+(x2-x3)^3", 3), o3,
      claim(2, 0, 0, 2, {"abelian transverse"}, {gen("Z1", 3, {{1, kOne}}, kOne), gen("Z23", 3, {{2, kOne}, {3, kOne}}, kZero)}),
      "dimension 3, commutative of dimension 2: f = x + ay + h(y - z)", "a = 0, h(u) = u + u^3");
  add("commutative-n4-m3", 4, parse("x1+x2+(x3-x4)+(x3-x4)^3", 4), o4,
      claim(3, 0, 0, 3, {"abelian transverse"},
            {gen("Z1", 4, {{1, kOne}}, kOne), gen("Z2", 4, {{2, kOne}}, kOne), gen("Z34", 4, {{3, kOne}, {4, kOne}}, kZero)}),
      "commutative of dimension n - 1: f = x1 + ... + x_{n-2} + g(x_{n-1} - x_n)", "g(u) = u + u^3");

  // n factors
  const GeneratorClaim nf = gen("F", 4, {{1, kOne}, {2, kOne}}, kZero);
  const GeneratorClaim ne = gen("E", 4, {{1, kIdentity}, {2, {1, 1}}}, kIdentity);
  add("n-example-n4", 4, parse("(1+x2-x1)*exp(x3+x4)", 4), o4,
      claim(4, 0, 1, 2, {"n transverse", "abelian transverse"},
            {nf, ne, gen("Z3", 4, {{3, kOne}}, kIdentity), gen("Z4", 4, {{4, kOne}}, kIdentity)}),
      "product construction with N = 1 factor n and C = 2: F.f = 0, E.f = f, Z.f = f");
  add("n10-n-plus-R", 3, parse("(1+x2-x1)*exp(x3)", 3), o3,
      claim(3, 0, 1, 1, {"n transverse", "abelian transverse"},
            {gen("F", 3, {{1, kOne}, {2, kOne}}, kZero), gen("E", 3, {{1, kIdentity}, {2, {1, 1}}}, kIdentity),
             gen("Z3", 3, {{3, kOne}}, kIdentity)}),
      "dimension 3, algebra n + R: f = (1 + y - x) exp(z)");
  add("n10-subcase1", 3, parse("x1+exp(x2)*(1+x3+x3^3)", 3), o3,
      claim(2, 0, 1, 0, {"n transverse"},
            {gen("Dx", 3, {{1, kOne}}, kOne), gen("E", 3, {{1, kIdentity}, {2, kOne}}, kIdentity)}),
      "dimension 3, algebra n, sub-case 1: generated by d/dx and x d/dx + d/dy, f = x + exp(y) h(z)", "h(z) = 1 + z + z^3");
  add("n10-subcase2", 3, parse("x1+exp(x2)*(1+2*(x3-x2)+(x3-x2)^3)", 3), o3,
      claim(2, 0, 1, 0, {"n transverse"},
            {gen("Dx", 3, {{1, kOne}}, kOne), gen("E", 3, {{1, kIdentity}, {2, kOne}, {3, kOne}}, kIdentity)}),
      "dimension 3, algebra n, sub-case 2: generated by d/dx and x d/dx + d/dy + d/dz, f = x + exp(y) h(z - y)",
      "h(u) = 1 + 2u + u^3");
  add("n10-subcase3", 3, parse("x1+(1+x2-x1)*(2+x3+x3^3)", 3), o3,
      claim(2, 0, 1, 0, {"n transverse"},
            {gen("F", 3, {{1, kOne}, {2, kOne}}, kOne), gen("E", 3, {{1, kIdentity}, {2, {1, 1}}}, kIdentity)}),
      "dimension 3, algebra n, sub-case 3: generated by d/dx + d/dy and x d/dx + (y + b) d/dy, f = ax + (b + y - x) h(z)",
      "a = 1, b = 1, h(z) = 2 + z + z^3");
  add("n10-subcase4", 3, parse("x1+exp(x3)*(3+(1+x2-x1)*exp(-x3)+((1+x2-x1)*exp(-x3))^3)", 3), o3,
      claim(2, 0, 1, 0, {"n transverse"},
            {gen("F", 3, {{1, kOne}, {2, kOne}}, kOne),
             gen("E", 3, {{1, kIdentity}, {2, {1, 1}}, {3, kOne}}, kIdentity)}),
      "dimension 3, algebra n, sub-case 4: generated by d/dx + d/dy and x d/dx + (y + b) d/dy + d/dz, "
      "f = ax + exp(z) h((b + y - x) exp(-z))",
      "a = 1, b = 1, h(v) = 3 + v + v^3");
  {
    const std::string d = "(1+3*(x2-x1)-(x3-x1))", v = "(((x3-x1)-2*(x2-x1))/" + d + ")";
    add("n10-subcase5", 3, parse("x1+" + d + "*(2+" + v + "+" + v + "^3)", 3), o3,
        claim(2, 0, 1, 0, {"n transverse"},
              {gen("F", 3, {{1, kOne}, {2, kOne}, {3, kOne}}, kOne),
               gen("E", 3, {{1, kIdentity}, {2, {1, 1}}, {3, {2, 1}}}, kIdentity)}),
        "dimension 3, algebra n, sub-case 5: generated by d/dx + d/dy + d/dz and x d/dx + (y + b) d/dy + (z + c) d/dz",
        "a = 1, b = 1, c = 2, h(v) = 2 + v + v^3");
  }

  // sl(2) factors
  add("sl2-family-n3", 3,
      parse("((x3+2)*(x2+1)+1*(x3+2)*x1-(1+1)*x1*(x2+1))/(x1+1*(x2+1)-(1+1)*(x3+2))", 3), o3,
      claim(3, 1, 0, 0, {"sl2 transverse"}, moebius(3, {0, 1, 2}, std::nullopt)),
      "dimension 3, algebra sl(2): the model with parameters lambda, b, c", "lambda = 1, b = 1, c = 2", 10);
  add("slDD-n3", 3, parse("(x2*x3+x3*x1-2*x1*x2)/(x1+x2-2*x3)", 3), Point{0, 1, 2},
      claim(3, 1, 0, 0, {"sl2 transverse"}, moebius(3, {0, 0, 0}, std::nullopt)),
      "f = (ayz + bzx + cxy) / (ax + by + cz) with a + b + c = 0 has algebra sl(2)", "(a, b, c) = (1, 1, -2)", 10);
  add("crossratio-n4", 4, parse("(x1*x2+x3*x4-x1*x3-x2*x4)/(x1*x2+x3*x4-x3*x2-x1*x4)", 4), Point{0, 1, 2, 3},
      claim(3, 1, 0, 0, {"sl2 tangent"}, moebius(4, {0, 0, 0, 0}, std::vector<Poly>{kZero, kZero, kZero})),
      "the cross-ratio 5-web: algebra sl(2) with orbits inside the level sets of f", "", 10);
  {
    Sl2Group g;
    g.others = {3, 4};
    g.c = {2, 3};
    add("l2-explicit-n4", 4,
        parse("(3+x1*x2-x1-3*x2+x4+3*x3+x3*x4-x3*x1-x2*x4)/(4+x1*x2-2*x1-2*x2+2*x4+2*x3+x3*x4-x3*x2-x1*x4)", 4), o4,
        claim(3, 1, 0, 0, {"sl2 tangent"}, group_generators(g, 4, false)),
        "explicit tangent sl(2) example with c = (0, 1, 2, 3): F.f = H.f = E.f = 0", "", 10);
  }
  {
    // h = u / (2 - u), u = y + 3: solves ((y+3)^2 - (y+3)) h' = h^2 - h
    const BuiltWeb b = build_f_l1(parse("(x1+3)/(2-(x1+3))", 1), {3}, 3, 3, o3);
    add("l1-n3", 3, b.f, o3, claim(3, 1, 0, 0, {"sl2 transverse"}, b.generators),
        "transverse sl(2) construction with p = 3: F.f = 1, H.f = f, E.f = f^2", "c3 = 3, h(y) = (y + 3) / (2 - (y + 3))");
  }
  {
    // h = u3 / (u3 - I (u3 - 1)) with I = ((u6 - 1)/u6) / ((u7 - 1)/u7) invariant for the tangent group
    const std::string u3 = "(x1+3)", u6 = "(x2+2)", u7 = "(x3+3)";
    const std::string inv = "(((" + u6 + "-1)/" + u6 + ")/((" + u7 + "-1)/" + u7 + "))";
    Sl2Group tr, tg;
    tr.others = {3};
    tr.c = {3};
    tg.first = 4;
    tg.second = 5;
    tg.others = {6, 7};
    tg.c = {2, 3};
    const Point o7(7, 0);
    const BuiltWeb b = build_sl2_web(parse(u3 + "/(" + u3 + "-" + inv + "*(" + u3 + "-1))", 3), tr, {tg}, 7, o7, 5);
    add("composite-n7", 7, b.f, o7, claim(6, 2, 0, 0, {"sl2 transverse", "sl2 tangent"}, b.generators),
        "two sl(2) factors, one transverse and one tangent, for n >= 7",
        "c3 = 3, c6 = 2, c7 = 3, h = u3 / (u3 - I (u3 - 1)) with u3 = y3 + 3 and I the tangent-group invariant", 8);
  }
  return out;
}

}  // namespace

const std::vector<AtlasEntry>& atlas_entries() {
  static const std::vector<AtlasEntry> entries = build_catalogue();
  return entries;
}

const AtlasEntry& atlas_entry(const std::string& id) {
  for (const auto& e : atlas_entries())
    if (e.id == id) return e;
  throw DomainError("unknown atlas entry '" + id + "'");
}

// ---------------------------------------------------------------------------
// verification

VerificationReport verify_entry(const AtlasEntry& e, const SolverOptions& opts) {
  VerificationReport rep;
  rep.id = e.id;
  const WebSpec w(e.n, e.f, e.base, e.order);
  rep.analysis = analyze_web(w, opts);
  const AnalysisReport& a = rep.analysis;
  auto note = [&](std::string s) { rep.discrepancies.push_back(std::move(s)); };
  if (!a.validation.valid) {
    note("web is invalid at the base point: " + a.validation.message);
    rep.status = Status::Discrepancy;
    return rep;
  }
  const int W = e.order;

  std::vector<linalg::Vector> exact_gens;
  for (const auto& g : e.claimed.generators) {
    GeneratorCheck chk;
    chk.name = g.name;
    const DiagonalField x = field_from_polynomials(g.components, e.base, W);
    chk.certificate = is_symmetry(x, w);
    if (chk.certificate.holds) {
      try {
        chk.phi = induced_phi(x, w);
      } catch (const ConsistencyAlarm& err) {
        rep.analysis.alarms.push_back("generator " + g.name + ": " + err.what());
      }
      if (chk.certificate.exact) exact_gens.push_back(x.flatten());
      if (g.phi && chk.phi) {
        const UniJet want = UniJet::from_polynomial(chk.phi->center(), W - 2, *g.phi);
        chk.phi_matches = chk.phi->truncate(W - 2) == want;
        if (!*chk.phi_matches) note("generator " + g.name + ": phi is " + chk.phi->truncate(W - 2).dump() + ", claimed " + want.dump());
      }
    } else {
      const auto& c = chk.certificate;
      std::string where;
      if (c.failing_pair) where = " (pair " + std::to_string(c.failing_pair->first) + "," + std::to_string(c.failing_pair->second) +
                                  ", coefficient " + to_string(c.failing_coefficient) + ")";
      note("generator " + g.name + " is not an infinitesimal isomorphism to order " + std::to_string(c.checked_order) + where);
    }
    rep.generators.push_back(std::move(chk));
  }
  if (!exact_gens.empty()) rep.dim_lower = linalg::span_basis(exact_gens, exact_gens.front().size()).size();

  if (a.solution) {
    const bool par = a.parallel && a.parallel->verdict == Verdict::Parallelizable;
    std::size_t upper = a.solution->dim();
    if (!par) upper = std::min(upper, e.n);
    if (a.solution->stabilized) rep.dim_upper = upper;
    rep.dim_exact = rep.dim_upper && rep.dim_lower == *rep.dim_upper;

    const Claim& c = e.claimed;
    if (c.dim && *c.dim != a.solution->dim())
      note("dimension: computed " + std::to_string(a.solution->dim()) + ", claimed " + std::to_string(*c.dim));
    if (a.parallel && c.parallelizable != par)
      note(std::string("parallelizability: computed ") + (par ? "parallelizable" : "not parallelizable") + ", claimed " +
           (c.parallelizable ? "parallelizable" : "not parallelizable"));
    if (a.factors) {
      const auto& d = *a.factors;
      auto cmp = [&](const char* name, const std::optional<std::size_t>& want, std::size_t got) {
        if (want && *want != got) note(std::string(name) + ": computed " + std::to_string(got) + ", claimed " + std::to_string(*want));
      };
      cmp("S", c.S, d.S);
      cmp("N", c.N, d.N);
      cmp("C", c.C, d.C);
      if (!c.profile.empty()) {
        std::vector<std::string> got;
        for (const auto& f : d.factors) got.push_back(to_string(f.type) + " " + f.action);
        std::vector<std::string> want = c.profile;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) {
          std::string g, wv;
          for (const auto& s : got) g += (g.empty() ? "" : ", ") + s;
          for (const auto& s : want) wv += (wv.empty() ? "" : ", ") + s;
          note("action profile: computed {" + g + "}, claimed {" + wv + "}");
        }
      }
    }
  }
  for (const auto& alarm : rep.analysis.alarms) note("internal-consistency alarm: " + alarm);

  const Claim& c = e.claimed;
  const bool any_claim = c.dim || c.S || c.N || c.C || !c.profile.empty() || !c.generators.empty();
  if (!any_claim)
    rep.status = Status::ComputedOnly;
  else
    rep.status = rep.discrepancies.empty() ? Status::Confirmed : Status::Discrepancy;
  return rep;
}

VerificationReport verify_entry(const std::string& id, const SolverOptions& opts) { return verify_entry(atlas_entry(id), opts); }

}  // namespace webiso
