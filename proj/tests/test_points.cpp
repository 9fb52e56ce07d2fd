#include <gtest/gtest.h>

#include <random>

#include "aluffi/errors.hpp"
#include "aluffi/instances.hpp"
#include "aluffi/points.hpp"
#include "test_support.hpp"

namespace aluffi {
namespace {

using testing::make_ideal;

ProjectivePoint pt(std::vector<Coefficient> c) { return ProjectivePoint(std::move(c)); }

TEST(ProjectivePoint, EqualityUpToScalar) {
  EXPECT_EQ(pt({2, 4, 6}), pt({-1, -2, -3}));
  EXPECT_FALSE(pt({1, 2, 3}) == pt({1, 2, 4}));
  EXPECT_EQ(pt({0, 3, 6}).canonical().coords(), (std::vector<Coefficient>{0, 1, 2}));
  EXPECT_THROW(pt({0, 0, 0}), PreconditionError);
}

TEST(PointSet, RejectsDuplicatesAndBadSizes) {
  EXPECT_THROW(PointSet(2, {pt({1, 0, 0}), pt({2, 0, 0})}), PreconditionError);
  EXPECT_THROW(PointSet(2, {pt({1, 0, 0, 0})}), PreconditionError);
}

TEST(PointFile, ParseAndFormat) {
  const PointSet pts = parse_points("# four points\n2 4\n1 0 0\n0 1 0\n0 0 1  # e2\n1/2 1/2 1/2\n");
  EXPECT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts[3], pt({1, 1, 1}));
  EXPECT_EQ(parse_points(format_points(pts)).points(), pts.points());
  EXPECT_THROW(parse_points("2 2\n1 0 0\n"), ParseError);
  EXPECT_THROW(parse_points("2 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_points("2 1\n1 0 z\n"), ParseError);
}

TEST(Glp, Examples) {
  EXPECT_TRUE(glp_check(standard_frame(3)));
  EXPECT_FALSE(glp_check(instances::collinear_triple()));
  EXPECT_TRUE(glp_check(instances::six_points_p3()));
  EXPECT_TRUE(glp_check(coordinate_points(4, 3)));
  EXPECT_FALSE(glp_check(PointSet(3, {pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({1, 1, 0, 0})})));
}

TEST(Glp, InvariantUnderCoordinateChange) {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 10; ++k) {
    const PointSet pts = testing::random_glp_points(rng, 3, 6);
    EXPECT_TRUE(glp_check(pts.transformed(testing::random_invertible(rng, 4, 3))));
  }
}

TEST(HyperplanePosition, Examples) {
  EXPECT_TRUE(hyperplane_position_check(hyperplane_standard_configuration(2)));
  EXPECT_TRUE(hyperplane_position_check(hyperplane_standard_configuration(3)));
  EXPECT_FALSE(hyperplane_position_check(standard_frame(3)));
  EXPECT_FALSE(hyperplane_position_check(PointSet(
      2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0}), pt({1, -1, 0})})));
  EXPECT_THROW(hyperplane_position_check(coordinate_points(3, 4)), PreconditionError);
}

TEST(VanishingIdeal, Point) {
  const PolyRing ring = PolyRing::projective(3);
  EXPECT_TRUE(ideal_equal(vanishing_ideal_point(pt({1, 0, 0, 0}), ring), make_ideal(3, {"x1", "x2", "x3"})));
  EXPECT_TRUE(ideal_equal(vanishing_ideal_point(pt({1, 1, 1, 1}), ring),
                          make_ideal(3, {"x0 - x1", "x1 - x2", "x2 - x3"})));
  const ProjectivePoint p = pt({3, -1, 2, 5});
  const Ideal ip = vanishing_ideal_point(p, ring);
  EXPECT_EQ(ip.generators().size(), 3u);
  for (const auto& g : ip.generators()) EXPECT_EQ(g.evaluate(p.coords()), 0);
}

TEST(IdealOfPoints, Examples) {
  EXPECT_TRUE(ideal_equal(ideal_of_points(instances::four_points_p2()),
                          make_ideal(2, {"x0*x2 - x1*x2", "x0*x1 - x1*x2"})));
  EXPECT_TRUE(ideal_equal(ideal_of_points(coordinate_points(4, 2)), make_ideal(4, {"x0*x1", "x2", "x3", "x4"})));
  EXPECT_TRUE(ideal_equal(ideal_of_points(instances::collinear_triple()),
                          make_ideal(2, {"x0", "x1*x2*(x1 - x2)"})));
  EXPECT_TRUE(ideal_equal(ideal_of_points(hyperplane_standard_configuration(2)),
                          make_ideal(2, {"x0*x2", "x1*x2", "x0*x1*(x0 - x1)"})));
}

TEST(IdealOfPoints, VanishesAndIsOrderIndependent) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 4; ++k) {
    const PointSet pts = testing::random_glp_points(rng, 3, 5 + k % 2);
    const Ideal j = ideal_of_points(pts);
    for (const auto& g : j.generators())
      for (const auto& p : pts.points()) EXPECT_EQ(g.evaluate(p.coords()), 0);
    auto shuffled = pts.points();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_TRUE(ideal_equal(j, ideal_of_points(PointSet(3, shuffled))));
  }
}

TEST(NormalizeFrame, Examples) {
  const auto same = normalize_frame(standard_frame(3));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(same.change(i, j) * same.change(0, 0).get_den() / same.change(0, 0).get_num(), i == j ? 1 : 0);
  const auto ex = normalize_frame(instances::six_points_p3());
  EXPECT_EQ(ex.normalized[4].coords(), (std::vector<Coefficient>{1, 1, 1, 1}));
  EXPECT_EQ(ex.normalized[5].coords(), (std::vector<Coefficient>{-1, 2, 3, 1}));
  EXPECT_THROW(normalize_frame(instances::collinear_triple()), PreconditionError);
  EXPECT_THROW(normalize_frame(coordinate_points(3, 4)), PreconditionError);
}

TEST(NormalizeFrame, RandomSetsReachStandardFrame) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 8; ++k) {
    const PointSet pts = testing::random_glp_points(rng, 3 + k % 2, 6 + k % 2);
    const auto frame = normalize_frame(pts);
    EXPECT_TRUE(is_standard_frame(frame.normalized));
    EXPECT_TRUE(glp_check(frame.normalized));
    EXPECT_NE(determinant(frame.change), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(pts.transformed(frame.change)[i], frame.normalized[i]);
  }
}

TEST(Igp, FourPointsInPlane) {
  const IgpGenerators igp = igp_construct(instances::four_points_p2());
  ASSERT_EQ(igp.generators.size(), 2u);
  EXPECT_EQ(format_poly(igp.generators[0]), "x0*x1 - x1*x2");
  EXPECT_EQ(format_poly(igp.generators[1]), "x0*x2 - x1*x2");
  EXPECT_EQ(igp.coefficient(0, 1, 1), -1);
}

TEST(Igp, NPlusTwoPoints) {
  for (std::size_t n : {3u, 4u, 5u}) {
    const IgpGenerators igp = igp_construct(standard_frame(n));
    const PolyRing ring = PolyRing::projective(n);
    std::vector<Polynomial> expected;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        if (!(i == n - 1 && j == n))
          expected.push_back(Polynomial::variable(ring, i) * Polynomial::variable(ring, j) -
                             Polynomial::variable(ring, n - 1) * Polynomial::variable(ring, n));
    EXPECT_EQ(igp.generators, expected);
  }
}

TEST(Igp, SixPointsInSpace) {
  const IgpGenerators igp = igp_construct(instances::six_points_p3());
  std::vector<std::string> got;
  for (const auto& g : igp.generators) got.push_back(format_poly(g));
  // The first three agree with the published list. The published fourth
  // quadric, x1*x2 - 4*x1*x3 + 3*x2*x3, is 7 at (-1:2:3:1); the one below
  // vanishes at all six points.
  EXPECT_EQ(got, (std::vector<std::string>{"x0*x1 - 5*x1*x3 + 4*x2*x3", "x0*x2 - 6*x1*x3 + 5*x2*x3",
                                           "x0*x3 - 4*x1*x3 + 3*x2*x3", "x1*x2 + 3*x1*x3 - 4*x2*x3"}));
  const std::vector<Coefficient> sixth{-1, 2, 3, 1};
  EXPECT_NE(testing::P("x1*x2 - 4*x1*x3 + 3*x2*x3", 3).evaluate(sixth), 0);
  EXPECT_TRUE(ideal_equal(Ideal(PolyRing::projective(3), igp.generators), ideal_of_points(instances::six_points_p3())));
}

TEST(Igp, StructuralProperties) {
  std::mt19937_64 rng(29);
  for (const auto& [n, s] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 5}, {3, 6}, {4, 6}, {4, 7}, {4, 8}, {5, 8}}) {
    const PointSet pts = normalize_frame(testing::random_glp_points(rng, n, s)).normalized;
    const IgpGenerators igp = igp_construct(pts);
    EXPECT_EQ(igp.lambda.size(), (n + 2) * (n + 1) / 2 - s);
    EXPECT_EQ(igp.t_first, 2 * n - s + 1);
    for (std::size_t i = 0; i <= 2 * n - s; ++i)
      for (std::size_t t = igp.t_first; t < n; ++t) EXPECT_NE(igp.coefficient(i, n, t), 0);
    for (const auto& g : igp.generators)
      for (const auto& p : pts.points()) EXPECT_EQ(g.evaluate(p.coords()), 0);
    EXPECT_TRUE(ideal_equal(Ideal(pts.ring(), igp.generators), ideal_of_points(pts)));
  }
}

TEST(Igp, Preconditions) {
  EXPECT_THROW(igp_construct(instances::six_points_p3().transformed(QMatrix{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})),
               PreconditionError);
  EXPECT_THROW(igp_construct(coordinate_points(3, 4)), PreconditionError);
  std::mt19937_64 rng(3);
  EXPECT_THROW(igp_construct(normalize_frame(testing::random_glp_points(rng, 3, 7)).normalized), PreconditionError);
}

TEST(HyperplaneIdeal, MatchesPoints) {
  EXPECT_TRUE(ideal_equal(hyperplane_standard_ideal(3),
                          make_ideal(3, {"x0*x1 - x1*x2", "x0*x2 - x1*x2", "x0*x3", "x1*x3", "x2*x3"})));
  for (std::size_t n : {3u, 4u, 5u})
    EXPECT_TRUE(ideal_equal(hyperplane_standard_ideal(n), ideal_of_points(hyperplane_standard_configuration(n))));
  EXPECT_THROW(hyperplane_standard_ideal(2), PreconditionError);
}

}  // namespace
}  // namespace aluffi
