#include <gtest/gtest.h>

#include "webiso/classify.hpp"
#include "webiso/lie.hpp"

using namespace webiso;
using namespace webiso::lie;

namespace {

Vector e(std::size_t m, std::size_t k) {
  Vector v(m);
  v[k] = 1;
  return v;
}

// sl(2) in a skewed basis: rows of a fixed invertible matrix applied to (F, H, E).
StructureConstants skewed_sl2() {
  const StructureConstants model = model_algebra(1, 0, 0);
  return change_basis(model, {{1, 2, 0}, {0, 1, 3}, {1, 0, 1}});
}

void expect_chevalley(const StructureConstants& sc, const std::vector<Vector>& t) {
  ASSERT_EQ(t.size(), 3u);
  const auto& F = t[0];
  const auto& H = t[1];
  const auto& E = t[2];
  EXPECT_EQ(bracket(sc, H, F), linalg::scaled(F, -1));
  EXPECT_EQ(bracket(sc, H, E), E);
  EXPECT_EQ(bracket(sc, F, E), linalg::scaled(H, 2));
}

}  // namespace

TEST(Lie, ModelAlgebrasSatisfyAxioms) {
  for (auto [S, N, C] : {std::tuple{1, 0, 0}, {0, 1, 0}, {2, 1, 1}, {1, 2, 0}}) {
    const StructureConstants sc = model_algebra(S, N, C);
    EXPECT_EQ(sc.dim(), 3u * S + 2u * N + C);
    EXPECT_FALSE(antisymmetry_violation(sc));
    EXPECT_FALSE(jacobi_violation(sc));
  }
}

TEST(Lie, DetectsJacobiViolation) {
  StructureConstants sc(3);
  // [e0,e1] = e1, [e1,e2] = e0, others zero: not Jacobi
  sc(0, 1, 1) = 1;
  sc(1, 0, 1) = -1;
  sc(1, 2, 0) = 1;
  sc(2, 1, 0) = -1;
  EXPECT_FALSE(antisymmetry_violation(sc));
  EXPECT_TRUE(jacobi_violation(sc));
}

TEST(Lie, CenterAndCentralizer) {
  const StructureConstants sc = model_algebra(1, 1, 2);
  const Subspace z = center(sc);
  EXPECT_EQ(z.size(), 2u);
  EXPECT_TRUE(contains(z, e(7, 5)));
  EXPECT_TRUE(contains(z, e(7, 6)));
  const Subspace derived = bracket_span(sc, whole(7), whole(7));
  EXPECT_EQ(derived.size(), 4u);  // sl2 plus the F of n
  const Subspace c = centralizer(sc, derived, whole(7));
  EXPECT_EQ(c.size(), 3u);  // center plus the F of n
}

TEST(Lie, ChevalleyTripleInSkewedBasis) {
  const StructureConstants sc = skewed_sl2();
  expect_chevalley(sc, chevalley_triple(sc, whole(3)));
}

TEST(Lie, ChevalleyTripleInsideIdeal) {
  const StructureConstants sc = model_algebra(1, 1, 1);
  const Subspace ideal = span({e(6, 0), e(6, 1), e(6, 2)}, 6);
  expect_chevalley(sc, chevalley_triple(sc, ideal));
}

TEST(Lie, NilpotentTripleKeepsRelations) {
  const StructureConstants sc = skewed_sl2();
  const auto t = chevalley_triple(sc, whole(3));
  for (auto [a, b] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, -3}, {-5, 2}}) {
    const auto n = nilpotent_triple(t, a, b);
    expect_chevalley(sc, n);
    // F stays ad-nilpotent: ad(F)^3 = 0
    const linalg::Matrix adF = ad(sc, n[0]);
    EXPECT_EQ(linalg::rank(adF * adF * adF), 0u) << a << "," << b;
  }
}

TEST(Lie, ChangeBasisRoundTrip) {
  const StructureConstants sc = model_algebra(0, 1, 1);
  const std::vector<Vector> b = {{1, 1, 0}, {0, 1, 2}, {1, 0, 1}};
  const StructureConstants t = change_basis(sc, b);
  const auto inv = linalg::inverse(linalg::Matrix::from_rows(b, 3));
  ASSERT_TRUE(inv);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < 3; ++r) rows.push_back(inv->row(r));
  EXPECT_EQ(change_basis(t, rows), sc);
}
