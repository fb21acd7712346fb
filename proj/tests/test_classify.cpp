#include <gtest/gtest.h>

#include <random>

#include "webiso/analysis.hpp"
#include "webiso/atlas.hpp"
#include "webiso/classify.hpp"
#include "webiso/error.hpp"

using namespace webiso;
using lie::StructureConstants;
using linalg::Vector;

namespace {

std::vector<Vector> random_invertible(std::mt19937& rng, std::size_t m) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    std::vector<Vector> rows(m, Vector(m));
    for (auto& r : rows)
      for (auto& x : r) x = d(rng);
    if (linalg::rank(linalg::Matrix::from_rows(rows, m)) == m) return rows;
  }
}

void expect_relations(const StructureConstants& sc, const Factor& f) {
  if (f.type == Factor::Type::Sl2) {
    const auto& F = f.generators[0];
    const auto& H = f.generators[1];
    const auto& E = f.generators[2];
    EXPECT_EQ(lie::bracket(sc, F, H), F);
    EXPECT_EQ(lie::bracket(sc, H, E), E);
    EXPECT_EQ(lie::bracket(sc, F, E), linalg::scaled(H, 2));
  } else if (f.type == Factor::Type::N) {
    EXPECT_EQ(lie::bracket(sc, f.generators[0], f.generators[1]), f.generators[0]);
  }
}

}  // namespace

TEST(Decompose, ModelAlgebrasUnderRandomBasisChange) {
  std::mt19937 rng(11);
  for (auto [S, N, C] : {std::tuple<std::size_t, std::size_t, std::size_t>{1, 0, 0}, {0, 1, 0}, {0, 0, 3}, {0, 1, 2},
                         {1, 0, 1}, {2, 0, 0}, {1, 1, 0}, {0, 2, 1}, {2, 1, 1}}) {
    const StructureConstants model = model_algebra(S, N, C);
    for (int trial = 0; trial < 3; ++trial) {
      const StructureConstants sc = lie::change_basis(model, random_invertible(rng, model.dim()));
      const FactorDecomposition d = decompose_factors(sc);
      EXPECT_EQ(d.S, S);
      EXPECT_EQ(d.N, N);
      EXPECT_EQ(d.C, C);
      EXPECT_EQ(d.m, model.dim());
      for (const auto& f : d.factors) expect_relations(sc, f);
      EXPECT_EQ(linalg::rank(d.transform), model.dim());
    }
  }
}

TEST(Decompose, RejectsNonProduct) {
  // [e0, e1] = e1, [e0, e2] = e2
  StructureConstants sc(3);
  sc(0, 1, 1) = 1;
  sc(1, 0, 1) = -1;
  sc(0, 2, 2) = 1;
  sc(2, 0, 2) = -1;
  EXPECT_THROW(decompose_factors(sc), ConsistencyAlarm);
}

TEST(Bound, Instances) {
  FactorDecomposition d;
  d.S = 2;
  d.m = 6;
  BoundReport r = check_theorem_bound(d, 7, false);
  EXPECT_TRUE(r.passed);
  r = check_theorem_bound(d, 6, false);
  EXPECT_FALSE(r.passed);  // 6 >= 7 fails
  d.S = 1;
  const auto checks = check_theorem_bound(d, 3, false).checks;
  ASSERT_EQ(checks.size(), 3u);
  EXPECT_TRUE(checks[2].applies);
  EXPECT_FALSE(checks[2].enforced);
  EXPECT_EQ(checks[2].instance, "3 >= 3");
  FactorDecomposition c;
  c.C = 3;
  EXPECT_FALSE(check_theorem_bound(c, 3, false).passed);
  EXPECT_TRUE(check_theorem_bound(c, 3, true).passed);
}

TEST(Analysis, NExampleProfile) {
  const AtlasEntry& e = atlas_entry("n-example-n4");
  const AnalysisReport a = analyze_web(WebSpec(e.n, e.f, e.base, e.order));
  EXPECT_TRUE(a.alarms.empty());
  ASSERT_TRUE(a.factors);
  EXPECT_EQ(a.factors->S, 0u);
  EXPECT_EQ(a.factors->N, 1u);
  EXPECT_EQ(a.factors->C, 2u);
  ASSERT_TRUE(a.routes);
  EXPECT_TRUE(a.routes->agree);
  for (const auto& f : a.factors->factors) EXPECT_EQ(f.action, "transverse");
}

TEST(Analysis, ParallelizableSkipsDecomposition) {
  const AtlasEntry& e = atlas_entry("parallelizable-n3");
  const AnalysisReport a = analyze_web(WebSpec(e.n, e.f, e.base, e.order));
  EXPECT_FALSE(a.factors);
  EXPECT_NE(a.decomposition_note.find("parallelizable"), std::string::npos);
}

TEST(Analysis, InvalidWebStops) {
  const AnalysisReport a = analyze_web(WebSpec(2, Expression::var(1) * Expression::var(2), {Rational(0), Rational(0)}));
  EXPECT_FALSE(a.validation.valid);
  EXPECT_FALSE(a.solution);
}

TEST(Analysis, CrossRatioIsTangent) {
  const AtlasEntry& e = atlas_entry("crossratio-n4");
  const AnalysisReport a = analyze_web(WebSpec(e.n, e.f, e.base, e.order));
  ASSERT_TRUE(a.factors);
  ASSERT_EQ(a.factors->factors.size(), 1u);
  EXPECT_EQ(a.factors->factors[0].action, "tangent");
}
