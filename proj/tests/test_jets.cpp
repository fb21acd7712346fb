#include <gtest/gtest.h>

#include "webiso/error.hpp"
#include "webiso/expr.hpp"
#include "webiso/jets.hpp"

using namespace webiso;

TEST(MonomialBasis, GradedLexOrder) {
  const MonomialBasis b(2, 2);
  ASSERT_EQ(b.size(), 6u);
  const std::vector<std::vector<int>> expected = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  for (std::size_t k = 0; k < b.size(); ++k) {
    auto e = b.exponents(k);
    EXPECT_EQ(std::vector<int>(e.begin(), e.end()), expected[k]);
    EXPECT_EQ(b.index(expected[k]), k);
  }
  EXPECT_EQ(b.count_upto(1), 3u);
  EXPECT_EQ(b.index_of_sum(1, 2), 4u);
}

TEST(MultiJet, TruncationIsPrefix) {
  const Point base = {Rational(1), Rational(2)};
  const MultiJet j = expand_to_jet(parse_expression("1/(x1 + x2)", 2), base, 6);
  const MultiJet t = j.truncate(3);
  EXPECT_EQ(t.order(), 3);
  for (std::size_t k = 0; k < t.coeffs().size(); ++k) EXPECT_EQ(t.coeff(k), j.coeff(k));
  EXPECT_THROW(t.truncate(4), Error);
}

TEST(MultiJet, GeometricSeries) {
  auto basis = make_basis(1, 10);
  const Point base = {Rational(0)};
  const MultiJet one_minus = MultiJet::constant(basis, base, 1) - MultiJet::coordinate(basis, base, 1);
  const MultiJet r = reciprocal(one_minus);
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(r.coeff(Exponents{k}), Rational(1));
  EXPECT_EQ(power(one_minus, -2).coeff(Exponents{4}), Rational(5));
}

TEST(MultiJet, ShapeMismatch) {
  const MultiJet a = MultiJet::constant(make_basis(2, 3), {Rational(0), Rational(0)}, 1);
  const MultiJet b = MultiJet::constant(make_basis(2, 3), {Rational(0), Rational(1)}, 1);
  EXPECT_THROW(a + b, ShapeError);
}

TEST(MultiJet, PartialDerivative) {
  const Point base = {Rational(1, 2), Rational(-1)};
  const Expression f = parse_expression("x1^3*x2 + x2^2/(1 + x1)", 2);
  const MultiJet d = jet_partial(expand_to_jet(f, base, 6), 1);
  EXPECT_EQ(d, expand_to_jet(parse_expression("3*x1^2*x2 - x2^2/(1 + x1)^2", 2), base, 5));
}

TEST(UniJet, Series) {
  const UniJet e = series::exp_at_zero(6);
  const UniJet l = series::log1p_at_zero(6);
  // exp(log(1 + s)) = 1 + s
  const UniJet c = uni_compose(e, l);
  EXPECT_EQ(c, UniJet(Rational(0), {1, 1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(series::expm1_at_zero(6) + UniJet::constant(0, 6, 1), e);
}

TEST(UniJet, ReversionIdentity) {
  // g(t) = 2 + 3 (t - 1) + (t - 1)^2 - (t - 1)^5 at center 1
  const UniJet g(Rational(1), {2, 3, 1, 0, 0, -1, 0, 0});
  const UniJet h = uni_reversion(g);
  EXPECT_EQ(h.center(), Rational(2));
  EXPECT_EQ(uni_compose(h, g), UniJet::identity(Rational(1), 7));
  EXPECT_EQ(uni_compose(g, h), UniJet::identity(Rational(2), 7));
  EXPECT_THROW(uni_reversion(UniJet(Rational(0), {0, 0, 1})), Error);
}

TEST(UniJet, PolynomialRecentering) {
  const std::vector<Rational> p = {1, -2, 0, 3};
  const UniJet u = UniJet::from_polynomial(Rational(2), 5, p);
  EXPECT_EQ(u.value(), Rational(1 - 4 + 24));
  std::vector<Rational> back = u.to_polynomial();
  back.resize(4);
  EXPECT_EQ(back, p);
  EXPECT_EQ(u.degree(), 3);
}

TEST(UniJet, IntegralInvertsDerivative) {
  const UniJet u(Rational(1, 3), {5, 1, 2, -7, 4});
  EXPECT_EQ(uni_integral(uni_derivative(u), u.value()).truncate(4), u);
}

TEST(MultiJet, SubstituteDiagonal) {
  // a(x1, x2) = x1 x2 at (1, 2); x1 = g1(t1) = 1 + t1 + t1^2, x2 = g2(t2) = 2 + 3 t2
  const Point base = {Rational(1), Rational(2)};
  const MultiJet a = expand_to_jet(parse_expression("x1*x2", 2), base, 4);
  const UniJet g1(Rational(0), {1, 1, 1, 0, 0});
  const UniJet g2(Rational(0), {2, 3, 0, 0, 0});
  const MultiJet s = substitute_diagonal(a, {g1, g2});
  const MultiJet expected = expand_to_jet(parse_expression("(1 + x1 + x1^2)*(2 + 3*x2)", 2), {Rational(0), Rational(0)}, 4);
  EXPECT_EQ(s, expected);
}

TEST(MultiJet, AxisRestrictionAndEmbed) {
  const Point base = {Rational(0), Rational(1)};
  const MultiJet a = expand_to_jet(parse_expression("x1 + x2^3 + x1*x2", 2), base, 4);
  const UniJet r = restrict_to_axis(a, 2);
  EXPECT_EQ(r, UniJet::from_polynomial(Rational(1), 4, {0, 0, 0, 1}));
  const MultiJet back = embed(r, 2, a.basis(), base);
  EXPECT_EQ(back, expand_to_jet(parse_expression("x2^3", 2), base, 4));
}
