#include <gtest/gtest.h>

#include "webiso/atlas.hpp"
#include "webiso/expr.hpp"
#include "webiso/normalform.hpp"

using namespace webiso;

namespace {

WebSpec web(std::size_t n, const std::string& f, int order = 8) {
  return WebSpec(n, parse_expression(f, n), Point(n, Rational(0)), order);
}

WebSpec entry_web(const std::string& id) {
  const AtlasEntry& e = atlas_entry(id);
  return WebSpec(e.n, e.f, e.base, e.order);
}

}  // namespace

// x + y + xy = (1 + x)(1 + y) - 1 becomes t1 + t2 under theta = log(1 + s).
TEST(NormalForm, ProductOfTwoIsLinear) {
  const WebSpec w = web(2, "x1 + x2 + x1*x2");
  const NormalFormResult r = compute_normal_form(w);
  EXPECT_EQ(r.linear_to_order, 8);
  EXPECT_FALSE(normal_form_violation(r, w));
  // theta = log(1 + s)
  for (int k = 1; k <= 7; ++k) EXPECT_EQ(r.theta[static_cast<std::size_t>(k)], Rational(k % 2 ? 1 : -1, k));
}

// f = x1 + x2 + x3 + x1 x2: the quadratic correction is fixed by theta(s) = s - s^2/6.
TEST(NormalForm, QuadraticCoefficients) {
  const WebSpec w = web(3, "x1 + x2 + x3 + x1*x2");
  const NormalFormResult r = compute_normal_form(w);
  EXPECT_EQ(r.a_quadratic[0][1], Rational(2, 3));
  EXPECT_EQ(r.a_quadratic[0][2], Rational(-1, 3));
  EXPECT_EQ(r.a_quadratic[1][2], Rational(-1, 3));
  EXPECT_EQ(r.theta[2], Rational(-1, 6));
  EXPECT_EQ(r.linear_to_order, 1);
  EXPECT_FALSE(normal_form_violation(r, w));
}

TEST(NormalForm, ReconstructionOnAtlas) {
  for (const char* id : {"slDD-n3", "n-example-n4", "commutative-n3-m2", "crossratio-n4", "n10-subcase4"}) {
    const WebSpec w = entry_web(id);
    const NormalFormResult r = compute_normal_form(w);
    EXPECT_FALSE(normal_form_violation(r, w)) << id;
    for (const auto& g : r.g) EXPECT_EQ(g.center(), Rational(0));
  }
}

TEST(NormalForm, HomotheticUniqueness) {
  for (const char* id : {"parallelizable-n3", "commutative-n3-m2", "n-example-n4"})
    for (const Rational& lambda : {Rational(2), Rational(-1), Rational(1, 2)}) {
      const HomothetyReport h = homothety_uniqueness_check(entry_web(id), lambda);
      EXPECT_TRUE(h.holds) << id << " " << to_string(lambda) << ": " << h.detail;
    }
}

TEST(Parallelizability, Verdicts) {
  EXPECT_EQ(parallelizability_test(web(3, "x1 + x2 + x3")).verdict, Verdict::Parallelizable);
  EXPECT_EQ(parallelizability_test(entry_web("parallelizable-product-n3")).verdict, Verdict::Parallelizable);
  const ParallelizabilityReport dd = parallelizability_test(entry_web("slDD-n3"));
  EXPECT_EQ(dd.verdict, Verdict::NotParallelizable);
  EXPECT_FALSE(dd.symmetry_branch);
  EXPECT_FALSE(dd.normal_form_branch);
  const ParallelizabilityReport p = parallelizability_test(web(3, "x1 + x2 + x3"));
  EXPECT_TRUE(p.symmetry_branch);
  EXPECT_TRUE(p.normal_form_branch);
  EXPECT_EQ(to_string(Verdict::Inconsistent), "inconsistent");
}
