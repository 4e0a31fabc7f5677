#include <gtest/gtest.h>

#include <random>

#include "subinit/order.hpp"
#include "subinit/parse.hpp"
#include "subinit/polynomial.hpp"
#include "subinit/rational.hpp"

using namespace subinit;

namespace {

std::vector<std::string> L(std::size_t n) { return default_labels(n); }
Polynomial P(const std::string& s, std::size_t n) { return parse_polynomial(s, L(n)); }
Monomial M(std::vector<int> e) { return Monomial(std::move(e)); }
WeightVector W(std::vector<long> v) { return WeightVector::from_integers(v); }

}  // namespace

TEST(Rational, ParsesAndNormalizes) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
  Rational q = parse_rational("-10/4");
  EXPECT_EQ(q, Rational(-5, 2));
  EXPECT_GT(q.get_den(), 0);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
}

TEST(Rational, ListsAndBinomials) {
  auto v = parse_rational_list("1, -2/3,0");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], Rational(-2, 3));
  EXPECT_EQ(lcm_of_denominators({Rational(1, 4), Rational(5, 6)}), 12);
  EXPECT_EQ(binomial(10, 5), 252);
}

TEST(WeightDegree, Examples) {
  EXPECT_EQ(weight_degree(M({1, 1, 0, 0}), W({0, 0, 1, 0})), 0);
  EXPECT_EQ(weight_degree(M({0, 0, 1, 1}), W({0, 0, 1, 0})), 1);
  EXPECT_EQ(weight_degree(M({2, 1}), W({0, 1})), 1);
  EXPECT_THROW(weight_degree(M({1, 1}), W({0, 1, 2})), DimensionError);
}

TEST(InitialForm, Examples) {
  EXPECT_EQ(initial_form(P("x1*x2 - x3*x4", 4), W({0, 0, 1, 0})), P("x1*x2", 4));
  auto p = P("x1*x2 - x3*x4 + 3*x1^2", 4);
  EXPECT_EQ(initial_form(p, WeightVector::zeros(4)), p);
  EXPECT_EQ(initial_form(P("x1^2*x2 - x1*x2^2", 2), W({0, 1})), P("x1^2*x2", 2));
  EXPECT_THROW(initial_form(Polynomial(3), W({0, 0, 0})), PreconditionError);
}

TEST(IsHomogeneous, Examples) {
  EXPECT_TRUE(is_homogeneous(P("x1*x2 - x3*x4", 4), W({1, 1, 1, 1})));
  EXPECT_FALSE(is_homogeneous(P("x1*x2 - x3*x4", 4), W({0, 0, 1, 0})));
  EXPECT_TRUE(is_homogeneous(Polynomial(4), W({5, 0, 1, 0})));
}

TEST(MonomialOrder, CompareExamples) {
  auto lex = MonomialOrder::lex(2);
  EXPECT_EQ(lex.compare(M({1, 0}), M({0, 1})), std::strong_ordering::greater);
  auto m = M({2, 0, 1, 3});
  EXPECT_EQ(MonomialOrder::grevlex(4).compare(m, m), std::strong_ordering::equal);
  EXPECT_EQ(lex.compare(M({3, 1}), M({3, 1})), std::strong_ordering::equal);
  auto wo = MonomialOrder::weighted(W({0, 0, 1, 0}), MonomialOrder::grevlex(4));
  EXPECT_EQ(wo.compare(M({1, 1, 0, 0}), M({0, 0, 1, 1})), std::strong_ordering::greater);
  EXPECT_THROW(lex.compare(M({1}), M({1, 0})), DimensionError);
}

TEST(MonomialOrder, GrevlexTieBreak) {
  auto g = MonomialOrder::grevlex(3);
  // x1*x3 < x2^2 in grevlex: the smallest variable x3 occurs.
  EXPECT_TRUE(g.less(M({1, 0, 1}), M({0, 2, 0})));
  EXPECT_TRUE(g.less(M({0, 0, 3}), M({1, 0, 0}) * M({0, 1, 0}) * M({1, 0, 0})));
}

TEST(MonomialOrder, EliminationOrderPutsDroppedVariablesFirst) {
  auto o = MonomialOrder::elimination({false, true, false});
  EXPECT_TRUE(o.less(M({5, 0, 5}), M({0, 1, 0})));
}

TEST(Polynomial, ArithmeticIsCanonical) {
  auto a = P("x1 + x2", 2), b = P("x1 - x2", 2);
  EXPECT_EQ(a * b, P("x1^2 - x2^2", 2));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(P("2*x1*x2 + x2*x1", 2), P("3*x1*x2", 2));
  EXPECT_EQ(P("(x1 + 1/2)^2", 1), P("x1^2 + x1 + 1/4", 1));
  EXPECT_EQ(P("x1*x2 - x3*x4", 4).total_degree(), 2);
  EXPECT_TRUE(P("-4*x1^3", 1).is_monomial());
}

TEST(Polynomial, ProjectAndResize) {
  auto p = P("x1*x2 - x3*x4", 4);
  EXPECT_EQ(p.project({true, true, true, false}), P("x1*x2", 4));
  EXPECT_TRUE(p.project({true, false, true, false}).is_zero());
  EXPECT_EQ(p.resized(5).resized(4), p);
  EXPECT_THROW(p.resized(3), PreconditionError);
}

TEST(Parse, GrammarAndErrors) {
  std::vector<std::string> labels{"x[1,2]", "x[3,4]", "x[1,3]"};
  auto p = parse_polynomial("x[1,2] * x[3,4] - x[1,3]^2", labels);
  EXPECT_EQ(to_string(p, labels), "x[1,2]*x[3,4] - x[1,3]^2");
  EXPECT_THROW(parse_polynomial("x1 +", L(2)), ParseError);
  EXPECT_THROW(parse_polynomial("x9", L(2)), ParseError);
  EXPECT_THROW(parse_polynomial("(x1", L(2)), ParseError);
  EXPECT_THROW(parse_polynomial("", L(2)), ParseError);
  EXPECT_EQ(to_string(P("x1*x2 - x3*x4", 4)), "x1*x2 - x3*x4");
}

TEST(Parse, InfersLabels) {
  EXPECT_EQ(infer_labels({"x1*x3"}), L(3));
  EXPECT_EQ(infer_labels({"x10 - x9"}).size(), 10u);
  auto l = infer_labels({"x[1,10]*x[2,3] - x[1,2]*x[1,9]"});
  std::vector<std::string> expect{"x[1,2]", "x[1,9]", "x[1,10]", "x[2,3]"};
  EXPECT_EQ(l, expect);
}

// Random polynomials for the property checks below.
namespace {

Polynomial random_homogeneous(std::mt19937_64& rng, std::size_t n, int d) {
  std::uniform_int_distribution<int> coef(-4, 4), var(0, static_cast<int>(n) - 1), nterms(1, 4);
  std::vector<Term> ts;
  for (int t = nterms(rng); t > 0; --t) {
    std::vector<int> e(n, 0);
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(var(rng))];
    ts.push_back({Monomial(e), Rational(coef(rng))});
  }
  auto p = Polynomial::from_terms(n, ts);
  return p.is_zero() ? Polynomial::monomial(Monomial::variable(n, 0)) * Rational(1) : p;
}

WeightVector random_w(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<long> v(n);
  for (auto& x : v) x = d(rng);
  return WeightVector::from_integers(v);
}

}  // namespace

TEST(InitialFormProperty, InvariantUnderAllOnesShift) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    auto p = random_homogeneous(rng, 4, 3);
    auto w = random_w(rng, 4);
    EXPECT_EQ(initial_form(p, w), initial_form(p, w + WeightVector::ones(4) * Rational(7, 3)));
  }
}

TEST(InitialFormProperty, Multiplicative) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    auto p = random_homogeneous(rng, 3, 2), q = random_homogeneous(rng, 3, 1);
    auto w = random_w(rng, 3);
    EXPECT_EQ(initial_form(p * q, w), initial_form(p, w) * initial_form(q, w));
  }
}

TEST(InitialFormProperty, FixedExactlyWhenHomogeneous) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 300; ++it) {
    auto p = random_homogeneous(rng, 3, 2);
    auto w = random_w(rng, 3);
    EXPECT_EQ(is_homogeneous(p, w), initial_form(p, w) == p);
  }
}

TEST(MonomialOrderProperty, WeightedOrderIsMultiplicativeWithUnitMinimal) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> ex(0, 3);
  auto rand_m = [&] {
    std::vector<int> e(4);
    for (auto& x : e) x = ex(rng);
    return Monomial(e);
  };
  for (int it = 0; it < 500; ++it) {
    auto o = MonomialOrder::weighted(random_w(rng, 4), MonomialOrder::grevlex(4));
    auto a = rand_m(), b = rand_m(), c = rand_m();
    EXPECT_EQ(o.compare(a, b), o.compare(a * c, b * c));
    if (!a.is_one()) EXPECT_TRUE(o.less(Monomial(4), a));
    // Leading terms of homogeneous polynomials are minimal-weight terms.
    if (a.degree() == b.degree() && o.less(a, b)) {
      EXPECT_LE(weight_degree(b, *o.weight()), weight_degree(a, *o.weight()));
    }
  }
}
