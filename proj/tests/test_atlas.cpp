#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "webiso/atlas.hpp"
#include "webiso/error.hpp"
#include "webiso/expr.hpp"

using namespace webiso;

namespace {

Point zeros(std::size_t n) { return Point(n, Rational(0)); }

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Builder, ConstantHalfFailsTheTransverseEquation) {
  // h = 1/2: h^2 - h = -1/4 while the left side vanishes
  const std::string msg = error_of([] { build_f_l1(Expression::constant(Rational(1, 2)), {3}, 3, 3, zeros(3)); });
  EXPECT_NE(msg.find("-1/4"), std::string::npos) << msg;
  EXPECT_THROW(build_f_l1(Expression::constant(Rational(1, 2)), {3}, 3, 3, zeros(3)), DomainError);
}

// Separation of variables: (h - 1)/h = K (u - 1)/u, u = y + c, gives h = u / (u - K (u - 1)).
TEST(Builder, SeparatedSolutionsAreAccepted) {
  for (int K : {2, 3, -1}) {
    const std::string u = "(x1+3)";
    const Expression h = parse_expression(u + "/(" + u + "-" + std::to_string(K) + "*(" + u + "-1))", 1);
    const BuiltWeb b = build_f_l1(h, {3}, 3, 3, zeros(3));
    EXPECT_EQ(b.generators.size(), 3u) << K;
    EXPECT_TRUE(validate_web(WebSpec(3, b.f, zeros(3))).valid) << K;
  }
}

TEST(Builder, ExtraVariableBreaksTheEquation) {
  const Expression h = parse_expression("(x1+3)/(2-(x1+3)) + x2", 2);
  EXPECT_THROW(build_f_l1(h, {3}, 4, 3, zeros(4)), DomainError);
  // more arguments than h can take
  EXPECT_THROW(build_f_l1(parse_expression("x1 + x2", 2), {3}, 3, 3, zeros(3)), ShapeError);
}

TEST(Builder, TangentNeedsFourVariables) {
  EXPECT_THROW(build_f_l2(parse_expression("x1", 1), {2}, 3, 3, zeros(3)), DomainError);
  const std::string msg = error_of([] { build_f_l2(parse_expression("x1", 1), {2}, 3, 3, zeros(3)); });
  EXPECT_NE(msg.find("p > 3"), std::string::npos);
}

TEST(Builder, ConstantTangentHIsNotAWeb) {
  EXPECT_THROW(build_f_l2(Expression::constant(2), {2, 3}, 4, 4, zeros(4)), InvalidWebError);
}

// The tangent invariant of the group with c = (2, 3) reproduces the published 4-variable f.
TEST(Builder, ExplicitTangentExample) {
  const Expression h = parse_expression("(((x1+2)-1)/(x1+2))/(((x2+3)-1)/(x2+3))", 2);
  const BuiltWeb b = build_f_l2(h, {2, 3}, 4, 4, zeros(4));
  const Expression& published = atlas_entry("l2-explicit-n4").f;
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-20, 20);
  int compared = 0;
  while (compared < 30) {
    Point p;
    for (int i = 0; i < 4; ++i) p.push_back(Rational(d(rng), 7));
    for (auto& q : p) q.canonicalize();
    try {
      EXPECT_EQ(evaluate(b.f, p), evaluate(published, p));
      ++compared;
    } catch (const DomainError&) {
    }
  }
  for (const auto& g : b.generators) EXPECT_EQ(*g.phi, std::vector<Rational>{0}) << g.name;
}

TEST(Groups, ThetaIsAnInvariantRatio) {
  Sl2Group g;
  g.others = {3};
  g.c = {Rational(2)};
  const Expression t = group_theta(g, 0);
  EXPECT_EQ(evaluate(t, {Rational(0), Rational(1), Rational(5)}), Rational(3, 2));
  const auto gens = group_generators(g, 4, true);
  ASSERT_EQ(gens.size(), 3u);
  EXPECT_EQ(gens[0].components[3], std::vector<Rational>{0});
  EXPECT_EQ(*gens[2].phi, (std::vector<Rational>{0, 0, 1}));
}

TEST(Atlas, EntriesAreValidAndUnique) {
  std::set<std::string> ids;
  for (const auto& e : atlas_entries()) {
    EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    const ValidationReport r = validate_web(WebSpec(e.n, e.f, e.base, e.order));
    EXPECT_TRUE(r.valid) << e.id << ": " << r.message;
    EXPECT_FALSE(e.claim_source.empty()) << e.id;
    if (e.claimed.dim && !e.claimed.parallelizable) {
      const std::size_t total = 3 * e.claimed.S.value_or(0) + 2 * e.claimed.N.value_or(0) + e.claimed.C.value_or(0);
      EXPECT_EQ(total, *e.claimed.dim) << e.id;
    }
  }
  EXPECT_GE(ids.size(), 20u);
  EXPECT_THROW(atlas_entry("no-such-entry"), DomainError);
}

TEST(Atlas, ConfirmedEntries) {
  for (const char* id : {"parallelizable-n3", "commutative-n3-m2", "n10-n-plus-R", "slDD-n3", "l1-n3"}) {
    const VerificationReport r = verify_entry(id);
    EXPECT_EQ(r.status, Status::Confirmed) << id;
    EXPECT_TRUE(r.discrepancies.empty()) << id;
    EXPECT_TRUE(r.analysis.alarms.empty()) << id;
  }
}

TEST(Atlas, SubcaseOneHasAnExtraAbelianFactor) {
  const VerificationReport r = verify_entry("n10-subcase1");
  EXPECT_EQ(r.status, Status::Discrepancy);
  ASSERT_TRUE(r.analysis.factors);
  EXPECT_EQ(r.analysis.factors->N, 1u);
  EXPECT_EQ(r.analysis.factors->C, 1u);
  EXPECT_TRUE(r.analysis.alarms.empty());
}
