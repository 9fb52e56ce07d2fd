#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "aluffi/errors.hpp"
#include "aluffi/instances.hpp"
#include "aluffi/jacobian.hpp"
#include "aluffi/points.hpp"
#include "aluffi/report_json.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace aluffi {
namespace {

using testing::make_ideal;
using testing::P;

PolyMatrix matrix_of(std::size_t n, std::size_t rows, std::size_t cols, const std::vector<std::string>& entries) {
  std::vector<Polynomial> ps;
  for (const auto& e : entries) ps.push_back(P(e, n));
  return PolyMatrix(rows, cols, std::move(ps));
}

PolyMatrix random_linear_matrix(std::mt19937_64& rng, std::size_t size) {
  const PolyRing ring = PolyRing::projective(3);
  std::vector<Polynomial> entries;
  for (std::size_t k = 0; k < size * size; ++k) entries.push_back(testing::random_form(rng, ring, 1, 2, 4));
  return PolyMatrix(size, size, std::move(entries));
}

// The three membership checks a reported witness must pass, each by an
// independent normal-form computation.
void expect_certified(const Ideal& j, const Ideal& i, unsigned t, const Polynomial& w) {
  EXPECT_TRUE(contains(j, w)) << format_poly(w);
  EXPECT_TRUE(contains(ideal_power(i, t), w)) << format_poly(w);
  EXPECT_FALSE(contains(ideal_product(j, ideal_power(i, t - 1)), w)) << format_poly(w);
}

TEST(JacobianMatrix, FourPoints) {
  const auto theta = jacobian_matrix(make_ideal(2, {"x0*x2 - x1*x2", "x0*x1 - x1*x2"}).generators());
  ASSERT_EQ(theta.rows(), 2u);
  ASSERT_EQ(theta.cols(), 3u);
  const std::vector<std::string> expected{"x2", "-x2", "x0 - x1", "x1", "x0 - x2", "-x1"};
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(format_poly(theta(k / 3, k % 3)), expected[k]);
  const auto single = jacobian_matrix(std::vector<Polynomial>{P("x0^2")});
  EXPECT_EQ(single(0, 0), P("2*x0"));
  EXPECT_TRUE(single(0, 1).is_zero());
  EXPECT_THROW(jacobian_matrix(std::vector<Polynomial>{}), PreconditionError);
}

TEST(Determinant, Examples) {
  const PolyMatrix m = matrix_of(3, 2, 2, {"x0", "x1", "x2", "x3"});
  EXPECT_EQ(determinant(m), P("x0*x3 - x1*x2", 3));
  const PolyMatrix swapped = matrix_of(3, 2, 2, {"x2", "x3", "x0", "x1"});
  EXPECT_EQ(determinant(swapped), -determinant(m));
  EXPECT_THROW(determinant(matrix_of(3, 1, 2, {"x0", "x1"})), PreconditionError);
}

TEST(Determinant, MatchesLeibnizOracle) {
  std::mt19937_64 rng(404);
  for (int k = 0; k < 10; ++k) {
    const PolyMatrix m = random_linear_matrix(rng, 4);
    EXPECT_EQ(determinant(m), oracles::leibniz_determinant(m));
  }
}

TEST(Determinant, AntisymmetricAndMultilinear) {
  std::mt19937_64 rng(405);
  for (int k = 0; k < 5; ++k) {
    const PolyMatrix m = random_linear_matrix(rng, 3);
    const Polynomial d = determinant(m);
    std::vector<std::size_t> rows{1, 0, 2};
    std::vector<std::size_t> cols{0, 1, 2};
    EXPECT_EQ(determinant(m.select(rows, cols)), -d);
    PolyMatrix scaled = m;
    const Polynomial f = testing::random_form(rng, m.ring(), 1, 2);
    for (std::size_t c = 0; c < 3; ++c) scaled(0, c) = scaled(0, c) * f;
    EXPECT_EQ(determinant(scaled), d * f);
    EXPECT_EQ(determinant(m.transpose()), d);
  }
}

TEST(Minors, EnumerationKeepsZeros) {
  const PolyMatrix m = matrix_of(2, 2, 3, {"x0", "0", "x1", "x2", "0", "x0"});
  const auto minors = all_minors(m, 2);
  ASSERT_EQ(minors.size(), 3u);
  EXPECT_TRUE(minors[0].is_zero());
  EXPECT_EQ(minors[1], P("x0^2 - x1*x2"));
  EXPECT_TRUE(minors[2].is_zero());
  EXPECT_THROW(all_minors(m, 3), PreconditionError);
}

TEST(CriticalIdeal, NPlusTwoPointsGiveMaximalPower) {
  for (std::size_t n : {3u, 4u}) {
    const auto data = critical_ideal(ideal_of_points(standard_frame(n)), n);
    EXPECT_TRUE(data.equals_power) << n;
  }
}

TEST(CriticalIdeal, SixPointsInSpace) {
  const auto data = critical_ideal(ideal_of_points(instances::six_points_p3()), 3);
  EXPECT_FALSE(data.equals_power);
  EXPECT_EQ(data.mu_critical, 16u);
  EXPECT_TRUE(ideal_contains_ideal(irrelevant_power(data.critical_ideal.ring(), 3), data.critical_ideal));
  for (const auto& m : data.minors) {
    EXPECT_TRUE(m.is_homogeneous());
    EXPECT_EQ(m.total_degree(), 3);
  }
}

// The hyperplane configuration in P^3 has only 17 independent cubic minors;
// the maximal power is still inside (J, I_3).
TEST(CriticalIdeal, HyperplaneConfigurationInSpace) {
  const Ideal j = hyperplane_standard_ideal(3);
  const auto data = critical_ideal(j, 3);
  EXPECT_EQ(data.mu_critical, 17u);
  EXPECT_FALSE(data.equals_power);
  EXPECT_TRUE(jacobian_contains_power(j, 3));
}

TEST(CriticalIdeal, RangeChecked) {
  const Ideal j = make_ideal(2, {"x0*x1"});
  EXPECT_THROW(critical_ideal(j, 2), PreconditionError);
  EXPECT_THROW(critical_ideal(j, 0), PreconditionError);
}

TEST(JacobianIdeal, Examples) {
  const std::size_t n = 3;
  const Ideal two = ideal_of_points(coordinate_points(n, 2));
  EXPECT_TRUE(ideal_equal(jacobian_ideal(two, n), Ideal::maximal(two.ring())));
  EXPECT_TRUE(jacobian_contains_power(two, n));

  const Ideal six = ideal_of_points(instances::six_points_p3());
  Ideal expected = ideal_sum(six, make_ideal(3, {"x1*x3^2", "x2*x3^2", "x0^3", "x1^3", "x2^3", "x3^3"}));
  EXPECT_TRUE(ideal_equal(jacobian_ideal(six, 3), expected));
  EXPECT_TRUE(jacobian_contains_power(six, 3));

  const Ideal hyper = ideal_of_points(hyperplane_standard_configuration(2));
  EXPECT_TRUE(ideal_equal(jacobian_ideal(hyper, 2),
                          make_ideal(2, {"x0^3", "x0^2*x1", "x0*x1^2", "x1^3", "x0*x2", "x1*x2", "x2^2"})));
}

TEST(JacobianIdeal, SevenPointsInP4) {
  const Ideal j = ideal_of_points(instances::seven_points_p4());
  EXPECT_TRUE(jacobian_contains_power(j, 4));
  EXPECT_TRUE(ideal_equal(jacobian_ideal(j, 4), ideal_sum(j, irrelevant_power(j.ring(), 4))));
}

TEST(VvComponent, TwoPoints) {
  const std::size_t n = 3;
  const Ideal j = ideal_of_points(coordinate_points(n, 2));
  const Ideal i = jacobian_ideal(j, n);
  const auto c = vv_component(j, i, 2);
  EXPECT_FALSE(c.vv_zero);
  ASSERT_TRUE(c.witness);
  expect_certified(j, i, 2, *c.witness);
  expect_certified(j, i, 2, P("x0*x1", n));
}

TEST(VvComponent, FourPoints) {
  const Ideal j = ideal_of_points(instances::four_points_p2());
  const Ideal i = jacobian_ideal(j, 2);
  const auto c = vv_component(j, i, 2);
  EXPECT_FALSE(c.vv_zero);
  ASSERT_TRUE(c.witness);
  expect_certified(j, i, 2, *c.witness);
  EXPECT_EQ(minimal_generators(Ideal(j.ring(), c.intersection)).mu, 11u);
}

TEST(VvComponent, HyperplaneInPlaneVanishes) {
  const Ideal j = ideal_of_points(hyperplane_standard_configuration(2));
  EXPECT_TRUE(vv_component(j, jacobian_ideal(j, 2), 2).vv_zero);
}

TEST(VvComponent, Preconditions) {
  const Ideal j = make_ideal(2, {"x0"});
  EXPECT_THROW(vv_component(j, make_ideal(2, {"x1"}), 2), PreconditionError);
  EXPECT_THROW(vv_component(j, j, 1), PreconditionError);
}

TEST(TorsionCheck, CoordinatePoints) {
  for (std::size_t n : {3u, 4u}) {
    for (std::size_t s = 1; s <= n + 1; ++s) {
      const Ideal j = ideal_of_points(coordinate_points(n, s));
      const Ideal i = jacobian_ideal(j, n);
      const auto report = torsion_free_check(j, i, 2);
      EXPECT_EQ(report.torsion_found(), s == 2) << "n=" << n << " s=" << s;
    }
  }
}

TEST(TorsionCheck, FastPathAndLabels) {
  const Ideal j = ideal_of_points(standard_frame(3));
  const Ideal i = jacobian_ideal(j, 3);
  const auto fast = torsion_free_check(j, i, 3, 3);
  EXPECT_TRUE(fast.fast_path);
  EXPECT_EQ(fast.verdict_label(), "torsion-free");
  EXPECT_TRUE(fast.degrees.empty());
  // Soundness of the shortcut: the explicit degree-2 check agrees.
  const auto slow = torsion_free_check(j, i, 2);
  EXPECT_FALSE(slow.fast_path);
  EXPECT_EQ(slow.verdict_label(), "torsion-free-up-to-2");
  EXPECT_THROW(torsion_free_check(j, i, 1), PreconditionError);
}

TEST(TorsionCheck, FastPathSoundOnSixPoints) {
  const Ideal j = ideal_of_points(instances::six_points_p3());
  const Ideal i = jacobian_ideal(j, 3);
  EXPECT_TRUE(power_criterion_applies(j, i, 3));
  EXPECT_TRUE(vv_component(j, i, 2).vv_zero);
}

TEST(TorsionCheck, CollinearTriple) {
  const Ideal j = ideal_of_points(instances::collinear_triple());
  const Ideal i = jacobian_ideal(j, 2);
  const auto report = torsion_free_check(j, i, 3, 2);
  EXPECT_FALSE(report.fast_path);
  EXPECT_EQ(report.verdict_label(), "torsion-at-2");
  ASSERT_EQ(report.degrees.size(), 1u);
  ASSERT_TRUE(report.degrees[0].witness);
  expect_certified(j, i, 2, *report.degrees[0].witness);
  expect_certified(j, i, 2, P("x1*x2^3*(x1 - x2)"));
}

TEST(TorsionCheck, ProjectiveInvariance) {
  std::mt19937_64 rng(909);
  for (const PointSet& pts : {instances::four_points_p2(), instances::collinear_triple()}) {
    const Ideal j = ideal_of_points(pts);
    const auto base = torsion_free_check(j, jacobian_ideal(j, 2), 2, 2);
    for (int k = 0; k < 2; ++k) {
      const QMatrix a = testing::random_invertible(rng, 3, 2);
      const Ideal ja = testing::transform_ideal(j, a);
      const auto moved = torsion_free_check(ja, jacobian_ideal(ja, 2), 2, 2);
      EXPECT_EQ(moved.verdict_label(), base.verdict_label());
    }
  }
}

TEST(TorsionReportJson, Shape) {
  const Ideal j = ideal_of_points(instances::four_points_p2());
  const auto report = torsion_free_check(j, jacobian_ideal(j, 2), 2, 2);
  const auto doc = to_json(report);
  EXPECT_EQ(doc.at("schema_version"), kJsonSchemaVersion);
  EXPECT_EQ(doc.at("pair").at("J").size(), 2u);
  EXPECT_EQ(doc.at("r"), 2);
  EXPECT_EQ(doc.at("fast_path"), false);
  EXPECT_EQ(doc.at("verdict"), "torsion-at-2");
  ASSERT_EQ(doc.at("degrees").size(), 1u);
  const auto witness = doc.at("degrees")[0].at("witness").get<std::string>();
  EXPECT_EQ(format_poly(P(witness)), witness);
}

}  // namespace
}  // namespace aluffi
