#include "aluffi/reference_suite.hpp"

#include <functional>
#include <map>

#include "aluffi/errors.hpp"
#include "aluffi/instances.hpp"
#include "aluffi/jacobian.hpp"
#include "aluffi/points.hpp"

namespace aluffi {

namespace {

using instances::ideal_from_text;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class RowBuilder {
 public:
  explicit RowBuilder(std::string name) { row_.name = std::move(name); }

  void check(std::string what, std::string expected, std::string computed) {
    const bool ok = expected == computed;
    row_.checks.push_back({std::move(what), std::move(expected), std::move(computed), ok});
  }
  void check(std::string what, bool expected, bool computed) {
    check(std::move(what), yes_no(expected), yes_no(computed));
  }
  void check(std::string what, std::size_t expected, std::size_t computed) {
    check(std::move(what), std::to_string(expected), std::to_string(computed));
  }

  SuiteRow done() { return std::move(row_); }

 private:
  SuiteRow row_;
};

std::string hilbert_values(const Ideal& ideal, unsigned up_to) {
  std::string out;
  for (unsigned d = 0; d <= up_to; ++d) {
    if (d) out += ",";
    out += std::to_string(hilbert_function(ideal, d));
  }
  return out;
}

// w ∈ J ∩ I^2 and w ∉ J I.
bool certified_degree_two(const Ideal& j, const Ideal& i, const Polynomial& w) {
  return contains(j, w) && contains(ideal_power(i, 2), w) && !contains(ideal_product(j, i), w);
}

SuiteRow two_points() {
  RowBuilder row("two-points-P3");
  const Ideal j = ideal_of_points(coordinate_points(3, 2));
  row.check("J = (x0*x1, x2, x3)", true, ideal_equal(j, ideal_from_text(3, {"x0*x1", "x2", "x3"})));
  const Ideal i = jacobian_ideal(j, 3);
  row.check("I = m", true, ideal_equal(i, Ideal::maximal(j.ring())));
  row.check("x0*x1 in J∩I^2 minus JI", true, certified_degree_two(j, i, parse_poly("x0*x1", j.ring())));
  row.check("verdict", "torsion-at-2", torsion_free_check(j, i, 2, 3).verdict_label());
  return row.done();
}

SuiteRow three_coordinate_points() {
  RowBuilder row("three-coordinate-points-P4");
  const Ideal j = ideal_of_points(coordinate_points(4, 3));
  const Ideal i = jacobian_ideal(j, 4);
  row.check("VV degree 2 vanishes", true, vv_component(j, i, 2).vv_zero);
  return row.done();
}

SuiteRow collinear() {
  RowBuilder row("collinear-triple-P2");
  const PointSet pts = instances::collinear_triple();
  row.check("general linear position", false, glp_check(pts));
  const Ideal j = ideal_of_points(pts);
  row.check("J = (x0, x1*x2*(x1 - x2))", true, ideal_equal(j, ideal_from_text(2, {"x0", "x1*x2*(x1 - x2)"})));
  const Ideal i = jacobian_ideal(j, 2);
  row.check("x1*x2^3*(x1 - x2) in J∩I^2 minus JI", true,
            certified_degree_two(j, i, parse_poly("x1*x2^3*(x1 - x2)", j.ring())));
  row.check("verdict", "torsion-at-2", torsion_free_check(j, i, 2, 2).verdict_label());
  return row.done();
}

SuiteRow four_points() {
  RowBuilder row("four-points-P2");
  const Ideal j = ideal_of_points(instances::four_points_p2());
  row.check("J = (x0*x2 - x1*x2, x0*x1 - x1*x2)", true,
            ideal_equal(j, ideal_from_text(2, {"x0*x2 - x1*x2", "x0*x1 - x1*x2"})));
  const Ideal i = jacobian_ideal(j, 2);
  const Ideal expected_i = ideal_from_text(
      2, {"x0*x1 - x0*x2", "x0*x2 - x1*x2", "x0*x2 + x1*x2 - x2^2", "-x0*x1 + x1^2 - x1*x2", "-x0^2 + x0*x1 + x0*x2"});
  row.check("I = five quadrics", true, ideal_equal(i, expected_i));
  row.check("mu(J∩I^2)", 11, minimal_generators(intersect(j, ideal_power(i, 2))).mu);
  row.check("mu(JI) <= 10", true, minimal_generators(ideal_product(j, i)).mu <= 10);
  row.check("verdict", "torsion-at-2", torsion_free_check(j, i, 2, 2).verdict_label());
  return row.done();
}

SuiteRow six_points() {
  RowBuilder row("six-points-P3");
  const PointSet pts = instances::six_points_p3();
  row.check("general linear position", true, glp_check(pts));
  const auto igp = igp_construct(normalize_frame(pts).normalized);
  const std::vector<std::string> displayed{"x0*x1 - 5*x1*x3 + 4*x2*x3", "x0*x2 - 6*x1*x3 + 5*x2*x3",
                                           "x0*x3 - 4*x1*x3 + 3*x2*x3", "x1*x2 - 4*x1*x3 + 3*x2*x3"};
  std::string computed;
  for (const auto& g : igp.generators) computed += (computed.empty() ? "" : ", ") + format_poly(g);
  std::string expected;
  for (const auto& g : displayed) expected += (expected.empty() ? "" : ", ") + g;
  row.check("quadric generators", expected, computed);
  const Ideal j(pts.ring(), igp.generators);
  const auto crit = critical_ideal(j, 3);
  row.check("mu(I_3)", 16, crit.mu_critical);
  row.check("I_3 = m^3", false, crit.equals_power);
  const Ideal i = jacobian_ideal(j, 3);
  row.check("m^3 in I", true, jacobian_contains_power(j, 3));
  const Ideal expected_i = ideal_sum(j, ideal_from_text(3, {"x1*x3^2", "x2*x3^2", "x0^3", "x1^3", "x2^3", "x3^3"}));
  row.check("I = (J, x1*x3^2, x2*x3^2, x0^3, x1^3, x2^3, x3^3)", true, ideal_equal(i, expected_i));
  row.check("verdict", "torsion-free", torsion_free_check(j, i, 2, 3).verdict_label());
  return row.done();
}

SuiteRow n_plus_two(std::size_t n) {
  RowBuilder row("n+2-points-P" + std::to_string(n));
  const PointSet pts = standard_frame(n);
  const auto igp = igp_construct(pts);
  const PolyRing ring = pts.ring();
  const Polynomial last = Polynomial::variable(ring, n - 1) * Polynomial::variable(ring, n);
  bool shape = igp.generators.size() + 1 == (n + 1) * n / 2;
  for (std::size_t k = 0; k < igp.generators.size() && shape; ++k) {
    const auto [a, b] = igp.lambda[k];
    shape = igp.generators[k] == Polynomial::variable(ring, a) * Polynomial::variable(ring, b) - last;
  }
  row.check("generators x_i*x_j - x_{n-1}*x_n", true, shape);
  const Ideal j(ring, igp.generators);
  row.check("I_n = m^n", true, critical_ideal(j, n).equals_power);
  row.check("verdict", "torsion-free", torsion_free_check(j, jacobian_ideal(j, n), 2, n).verdict_label());
  return row.done();
}

SuiteRow hyperplane_p2() {
  RowBuilder row("hyperplane-P2");
  const PointSet pts = hyperplane_standard_configuration(2);
  row.check("hyperplane linear position", true, hyperplane_position_check(pts));
  const Ideal j = ideal_of_points(pts);
  row.check("J = (x0*x2, x1*x2, x0*x1*(x0 - x1))", true,
            ideal_equal(j, ideal_from_text(2, {"x0*x2", "x1*x2", "x0*x1*(x0 - x1)"})));
  const Ideal i = jacobian_ideal(j, 2);
  row.check("I = (x0^3, x0^2*x1, x0*x1^2, x1^3, x0*x2, x1*x2, x2^2)", true,
            ideal_equal(i, ideal_from_text(2, {"x0^3", "x0^2*x1", "x0*x1^2", "x1^3", "x0*x2", "x1*x2", "x2^2"})));
  row.check("J∩I^2 in JI", true, vv_component(j, i, 2).vv_zero);
  return row.done();
}

SuiteRow hyperplane_p3() {
  RowBuilder row("hyperplane-P3");
  const Ideal j = ideal_of_points(hyperplane_standard_configuration(3));
  row.check("J = standard hyperplane ideal", true, ideal_equal(j, hyperplane_standard_ideal(3)));
  row.check("Hilbert function 0..4", "1,4,5,5,5", hilbert_values(j, 4));
  row.check("I_3 = m^3", true, critical_ideal(j, 3).equals_power);
  row.check("m^3 in (J, I_3)", true, jacobian_contains_power(j, 3));
  row.check("verdict", "torsion-free", torsion_free_check(j, jacobian_ideal(j, 3), 2, 3).verdict_label());
  return row.done();
}

SuiteRow n_plus_three_p4() {
  RowBuilder row("n+3-points-P4");
  const PointSet pts = instances::seven_points_p4();
  row.check("general linear position", true, glp_check(pts));
  const Ideal j = ideal_of_points(pts);
  row.check("mu(J)", 8, minimal_generators(j).mu);
  row.check("m^4 in (J, I_4)", true, jacobian_contains_power(j, 4));
  row.check("verdict", "torsion-free", torsion_free_check(j, jacobian_ideal(j, 4), 2, 4).verdict_label());
  return row.done();
}

const std::vector<std::pair<std::string, std::function<SuiteRow()>>>& rows() {
  static const std::vector<std::pair<std::string, std::function<SuiteRow()>>> table{
      {"two-points-P3", two_points},
      {"three-coordinate-points-P4", three_coordinate_points},
      {"collinear-triple-P2", collinear},
      {"four-points-P2", four_points},
      {"six-points-P3", six_points},
      {"n+2-points-P3", [] { return n_plus_two(3); }},
      {"n+2-points-P4", [] { return n_plus_two(4); }},
      {"hyperplane-P2", hyperplane_p2},
      {"hyperplane-P3", hyperplane_p3},
      {"n+3-points-P4", n_plus_three_p4},
  };
  return table;
}

}  // namespace

bool SuiteRow::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return !checks.empty();
}

std::vector<std::string> reference_row_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : rows()) names.push_back(name);
  return names;
}

SuiteRow run_reference_row(const std::string& name) {
  for (const auto& [row_name, fn] : rows())
    if (row_name == name) return fn();
  throw PreconditionError("unknown reference row '" + name + "'");
}

std::vector<SuiteRow> run_reference_suite() {
  std::vector<SuiteRow> out;
  for (const auto& [name, fn] : rows()) out.push_back(fn());
  return out;
}

}  // namespace aluffi
