#include <gtest/gtest.h>

#include "webiso/atlas.hpp"
#include "webiso/error.hpp"
#include "webiso/expr.hpp"
#include "webiso/symmetry.hpp"

using namespace webiso;

namespace {

Point zeros(std::size_t n) { return Point(n, Rational(0)); }

WebSpec web(std::size_t n, const std::string& f, Point base, int order = 8) {
  return WebSpec(n, parse_expression(f, n), std::move(base), order);
}

// X f built directly from jets, independent of apply_field.
MultiJet act(const DiagonalField& x, const MultiJet& f) {
  const MultiJet low = f.truncate(f.order() - 1);
  MultiJet acc = MultiJet::constant(low.basis(), f.base(), 0);
  for (std::size_t i = 0; i < x.n(); ++i)
    acc = acc + embed(x.components[i].truncate(low.order()), i + 1, low.basis(), f.base()) * jet_partial(f, i + 1);
  return acc;
}

// d(Xf) ^ df = 0 for every pair (p, q), to order W - 2.
bool all_pairs_vanish(const DiagonalField& x, const WebSpec& w) {
  const MultiJet f = w.jet(w.order());
  const MultiJet xf = act(x, f);
  const int t = w.order() - 2;
  for (std::size_t p = 1; p <= w.n(); ++p)
    for (std::size_t q = p + 1; q <= w.n(); ++q) {
      const MultiJet r = jet_partial(xf, p) * jet_partial(f, q).truncate(t) - jet_partial(xf, q) * jet_partial(f, p).truncate(t);
      if (!r.is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST(Validation, ReportsVanishingPartials) {
  const ValidationReport r = validate_web(web(3, "x1*x2 + x3", zeros(3)));
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.vanishing, (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(require_valid(web(3, "x1*x2 + x3", zeros(3))), InvalidWebError);
  const ValidationReport ok = validate_web(web(2, "x1 + x2 + x1*x2", {Rational(1), Rational(2)}));
  EXPECT_TRUE(ok.valid);
  EXPECT_EQ(ok.value, Rational(5));
  EXPECT_EQ(ok.partials, (std::vector<Rational>{3, 2}));
}

TEST(Validation, ConstructorGuards) {
  EXPECT_THROW(web(1, "x1", zeros(1)), Error);
  EXPECT_THROW(web(2, "x1 + x2", zeros(3)), Error);
  EXPECT_THROW(web(2, "x1 + x2", zeros(2), 1), Error);
}

TEST(IsSymmetry, TranslationsAndScalingsOfASum) {
  const WebSpec w = web(3, "x1 + x2 + x3", zeros(3));
  for (const auto& polys : std::vector<std::vector<std::vector<Rational>>>{
           {{1}, {0}, {0}}, {{0, 1}, {0, 1}, {0, 1}}, {{1}, {-1}, {2}}}) {
    const DiagonalField x = field_from_polynomials(polys, w.base(), w.order());
    const SymmetryCertificate c = is_symmetry(x, w);
    EXPECT_TRUE(c.holds);
    EXPECT_TRUE(c.exact);
  }
}

TEST(IsSymmetry, ReportsFailingPair) {
  const WebSpec w = web(3, "x1 + x2 + x3", zeros(3));
  const SymmetryCertificate c = is_symmetry(field_from_polynomials({{0, 1}, {0}, {0}}, w.base(), w.order()), w);
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.failing_pair);
  EXPECT_NE(c.failing_coefficient, Rational(0));
}

TEST(IsSymmetry, MoebiusOnDiagonalWeb) {
  const AtlasEntry& e = atlas_entry("slDD-n3");
  const WebSpec w(e.n, e.f, e.base, e.order);
  for (const auto& g : e.claimed.generators) {
    const SymmetryCertificate c = is_symmetry(field_from_polynomials(g.components, w.base(), w.order()), w);
    EXPECT_TRUE(c.holds) << g.name;
    EXPECT_TRUE(c.exact) << g.name;
  }
  // x^3 on each axis is not a symmetry
  EXPECT_FALSE(is_symmetry(field_from_polynomials({{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}}, w.base(), w.order()), w).holds);
}

TEST(InducedPhi, MatchesHandComputation) {
  const WebSpec w = web(3, "x1 + x2 + x3", zeros(3));
  const UniJet phi = induced_phi(field_from_polynomials({{1}, {1}, {1}}, w.base(), w.order()), w);
  EXPECT_EQ(phi, UniJet::constant(Rational(0), w.order() - 1, 3));
  const UniJet h = induced_phi(field_from_polynomials({{0, 1}, {0, 1}, {0, 1}}, w.base(), w.order()), w);
  EXPECT_EQ(h, UniJet::identity(Rational(0), w.order() - 1));
  EXPECT_THROW(induced_phi(field_from_polynomials({{0, 1}, {0}, {0}}, w.base(), w.order()), w), Error);
}

TEST(Solver, SumHasFourSymmetries) {
  const WebSpec w = web(3, "x1 + x2 + x3", zeros(3));
  const SymmetrySolution s = solve_symmetries(w);
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_TRUE(s.stabilized);
  EXPECT_TRUE(s.closed);
  EXPECT_EQ(s.degree_cap, w.order() - 1);
  EXPECT_EQ(orbit_rank(s.basis), 3u);
  EXPECT_EQ(vanishing_combinations(s.basis).size(), 1u);
}

TEST(Solver, DiagonalWebHasThree) {
  const AtlasEntry& e = atlas_entry("slDD-n3");
  const SymmetrySolution s = solve_symmetries(WebSpec(e.n, e.f, e.base, e.order));
  EXPECT_EQ(s.dim(), 3u);
  EXPECT_TRUE(s.stabilized);
  EXPECT_TRUE(vanishing_combinations(s.basis).empty());
}

// The solver only imposes the pairs (1, q); every pair must hold for its output.
TEST(Solver, OneQPairsImplyAllPairs) {
  for (const char* id : {"n-example-n4", "crossratio-n4", "commutative-n4-m3", "n10-subcase3"}) {
    const AtlasEntry& e = atlas_entry(id);
    const WebSpec w(e.n, e.f, e.base, e.order);
    const SymmetrySolution s = solve_symmetries(w);
    ASSERT_FALSE(s.basis.empty()) << id;
    for (const auto& x : s.basis) EXPECT_TRUE(all_pairs_vanish(x, w)) << id;
  }
}

TEST(Solver, DegreeCapOption) {
  const WebSpec w = web(3, "x1 + x2 + x3", zeros(3));
  SolverOptions o;
  o.degree_cap = 3;
  EXPECT_EQ(solve_symmetries(w, o).degree_cap, 3);
}

TEST(ApplyField, AgreesWithDirectJets) {
  const WebSpec w = web(3, "(x1 - x2*x3)/(2 + x1)", {Rational(1), Rational(1, 2), Rational(-1)}, 7);
  const DiagonalField x = field_from_polynomials({{1, 2}, {0, 0, 3}, {-1, 1}}, w.base(), w.order());
  EXPECT_EQ(apply_field(x, w.jet(w.order())), act(x, w.jet(w.order())));
}
