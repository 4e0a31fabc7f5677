#include <gtest/gtest.h>

#include <random>

#include "subinit/configspace.hpp"
#include "subinit/fixtures.hpp"
#include "subinit/linalg.hpp"
#include "subinit/parse.hpp"

using namespace subinit;

namespace {

Ideal I(const std::vector<std::string>& gens, std::size_t n) {
  auto labels = default_labels(n);
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(parse_polynomial(s, labels));
  return Ideal(labels, g);
}

std::vector<Rational> V(std::vector<long> v) { return WeightVector::from_integers(v).entries(); }

PointConfiguration config(std::vector<std::vector<Rational>> rows) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= rows.size(); ++i) labels.push_back(std::to_string(i));
  std::size_t d = rows.empty() ? 0 : rows[0].size();
  return PointConfiguration(labels, RationalMatrix::from_rows(rows, d));
}

std::vector<Ideal> sample_ideals() {
  std::mt19937_64 rng(31);
  std::vector<Ideal> out{I({"x1*x2 - x3*x4"}, 4), I({"x1^2*x2 - x1*x2^2"}, 2), plucker_ideal(2, 4),
                         plucker_ideal(2, 5), toric_ideal(square_config()), toric_ideal(hypersimplex_config(2, 4))};
  for (int i = 0; i < 12; ++i) out.push_back(random_homogeneous_ideal(4, 2, 2, rng));
  return out;
}

}  // namespace

TEST(LinealitySpace, SquareBinomialIsTheHyperplane) {
  auto l = lineality_space(I({"x1*x2 - x3*x4"}, 4));
  EXPECT_EQ(l.dimension(), 3u);
  EXPECT_TRUE(l.contains(V({1, 0, 1, 0})));
  EXPECT_TRUE(l.contains(V({1, -1, 0, 0})));
  EXPECT_TRUE(l.contains(V({0, 0, 1, -1})));
  EXPECT_FALSE(l.contains(V({0, 0, 1, 0})));
}

TEST(LinealitySpace, CoincidentBinomialIsTheDiagonal) {
  auto l = lineality_space(I({"x1^2*x2 - x1*x2^2"}, 2));
  EXPECT_EQ(l.dimension(), 1u);
  EXPECT_TRUE(l.contains_ones());
}

TEST(LinealitySpace, PluckerFourIsSpannedByVertexVectors) {
  auto l = lineality_space(plucker_ideal(2, 4));
  EXPECT_EQ(l.dimension(), 4u);
  // w_i has 1 at every pair containing i.
  for (std::size_t i = 1; i <= 4; ++i) {
    std::vector<Rational> w(6, 0);
    for (std::size_t j = 1; j <= 4; ++j)
      if (j != i) w[pair_index(i, j, 4)] = 1;
    EXPECT_TRUE(l.contains(w));
  }
}

TEST(LinealitySpace, EdgeCases) {
  auto zero = lineality_space(Ideal::zero(default_labels(3)));
  EXPECT_EQ(zero.dimension(), 3u);
  EXPECT_THROW(lineality_space(Ideal::unit(default_labels(3))), PreconditionError);
  EXPECT_THROW(lineality_space(I({"x1*x2 - x3"}, 3)), PreconditionError);
}

TEST(PointConfigurationOfIdeal, SquareWithFirstTwoPointsOpposite) {
  auto a = point_configuration_of_ideal(I({"x1*x2 - x3*x4"}, 4));
  EXPECT_EQ(a.size(), 4u);
  auto sq = square_config();
  sq.labels = a.labels;
  EXPECT_TRUE(affine_equivalent(a, sq));
  // Points 1, 2 opposite: a1 + a2 = a3 + a4.
  for (std::size_t j = 0; j < a.ambient_dimension(); ++j)
    EXPECT_EQ(a.points(0, j) + a.points(1, j), a.points(2, j) + a.points(3, j));
}

TEST(PointConfigurationOfIdeal, CoincidentPoints) {
  auto a = point_configuration_of_ideal(I({"x1^2*x2 - x1*x2^2"}, 2));
  EXPECT_EQ(a.point(0), a.point(1));
  EXPECT_EQ(a.affine_dimension(), 0);
}

TEST(PointConfigurationOfIdeal, PluckerFourIsTheOctahedron) {
  auto a = point_configuration_of_ideal(plucker_ideal(2, 4));
  EXPECT_TRUE(affine_equivalent(a, hypersimplex_config(2, 4)));
  EXPECT_EQ(a.affine_dimension(), 3);
}

TEST(LinealityOfConfig, Examples) {
  EXPECT_EQ(lineality_of_config(square_config()).dimension(), 3u);
  auto two = config({V({5}), V({5})});
  auto l = lineality_of_config(two);
  EXPECT_EQ(l.dimension(), 1u);
  EXPECT_TRUE(l.contains_ones());
  EXPECT_TRUE(lineality_of_config(hypersimplex_config(2, 4)).same_span(lineality_space(plucker_ideal(2, 4))));
}

TEST(AffineEquivalent, Examples) {
  auto sq = config({V({0, 0}), V({1, 1}), V({1, 0}), V({0, 1})});
  EXPECT_TRUE(affine_equivalent(sq, sq));
  auto line = config({V({0}), V({1}), V({2}), V({3})});
  EXPECT_FALSE(affine_equivalent(sq, line));
  // An affine image of the square.
  auto img = config({V({3, 1}), V({6, 0}), V({5, -1}), V({4, 2})});
  EXPECT_TRUE(affine_equivalent(sq, img));
  auto relabeled = sq;
  relabeled.labels[0] = "z";
  EXPECT_THROW(affine_equivalent(sq, relabeled), PreconditionError);
}

TEST(OrthogonalProjection, Examples) {
  SubspaceBasis diag{RationalMatrix::from_rows({V({1}), V({1})}, 1)};
  auto p = orthogonal_projection_config(diag);
  EXPECT_EQ(p.point(0), (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(p.point(1), p.point(0));
  auto full = orthogonal_projection_config({RationalMatrix::identity(3)});
  EXPECT_EQ(full.points, RationalMatrix::identity(3));
  auto l = lineality_space(I({"x1*x2 - x3*x4"}, 4));
  auto sq = orthogonal_projection_config(l, {"x1", "x2", "x3", "x4"});
  EXPECT_TRUE(affine_equivalent(sq, square_config()));
  SubspaceBasis no_ones{RationalMatrix::from_rows({V({1}), V({0})}, 1)};
  EXPECT_THROW(orthogonal_projection_config(no_ones), PreconditionError);
}

TEST(ConfigspaceProperty, RoundTripThroughLineality) {
  for (const auto& ideal : sample_ideals()) {
    if (ideal.is_unit()) continue;
    auto l = lineality_space(ideal);
    auto a = point_configuration_of_ideal(ideal);
    EXPECT_TRUE(lineality_of_config(a).same_span(l));
    EXPECT_TRUE(l.contains_ones());
    // N * M = 0 exactly.
    EXPECT_TRUE((lineality_matrix(ideal) * l.basis).is_zero());
    EXPECT_EQ(rank(l.basis), l.dimension());
  }
}

TEST(ConfigspaceProperty, ProjectionIsAffinelyEquivalent) {
  for (const auto& ideal : sample_ideals()) {
    if (ideal.is_unit()) continue;
    auto l = lineality_space(ideal);
    auto proj = orthogonal_projection_config(l, ideal.labels());
    EXPECT_TRUE(affine_equivalent(proj, point_configuration_of_ideal(ideal)));
    EXPECT_TRUE(lineality_of_config(proj).same_span(l));
  }
}

TEST(ConfigspaceProperty, ToricIdealRecoversItsConfiguration) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long> c(0, 3);
  for (int it = 0; it < 8; ++it) {
    std::vector<std::vector<Rational>> rows;
    for (int e = 0; e < 5; ++e) rows.push_back(V({c(rng), c(rng)}));
    auto a = config(rows);
    if (a.affine_dimension() < 1) continue;
    auto t = toric_ideal(a);
    if (t.is_zero()) continue;
    auto back = point_configuration_of_ideal(t);
    auto relabeled = a;
    relabeled.labels = back.labels;
    EXPECT_TRUE(affine_equivalent(back, relabeled));
  }
}
