#include "aluffi/instances.hpp"

namespace aluffi::instances {

namespace {

PointSet from_rows(std::size_t n, const std::vector<std::vector<long>>& rows) {
  std::vector<ProjectivePoint> pts;
  for (const auto& r : rows) {
    std::vector<Coefficient> c;
    for (long v : r) c.emplace_back(v);
    pts.emplace_back(std::move(c));
  }
  return PointSet(n, std::move(pts));
}

}  // namespace

PointSet four_points_p2() { return from_rows(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}); }

PointSet collinear_triple() { return from_rows(2, {{0, 1, 0}, {0, 0, 1}, {0, 1, 1}}); }

PointSet six_points_p3() {
  return from_rows(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}, {-1, 2, 3, 1}});
}

PointSet seven_points_p4() {
  return from_rows(4, {{1, 0, 0, 0, 0},
                       {0, 1, 0, 0, 0},
                       {0, 0, 1, 0, 0},
                       {0, 0, 0, 1, 0},
                       {0, 0, 0, 0, 1},
                       {2, 3, 5, 7, 1},
                       {-1, 4, -3, 2, 1}});
}

Ideal ideal_from_text(std::size_t n, const std::vector<std::string>& gens) {
  const PolyRing ring = PolyRing::projective(n);
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(parse_poly(g, ring));
  return Ideal(ring, std::move(polys));
}

}  // namespace aluffi::instances
