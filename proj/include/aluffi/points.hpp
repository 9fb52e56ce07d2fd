#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aluffi/coefficient.hpp"
#include "aluffi/ideal.hpp"
#include "aluffi/linalg.hpp"

namespace aluffi {

/// Point of P^n given by n+1 rational homogeneous coordinates, not all zero.
/// Equality is up to a nonzero scalar.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Coefficient> coords);

  std::size_t size() const { return coords_.size(); }
  const std::vector<Coefficient>& coords() const { return coords_; }
  const Coefficient& operator[](std::size_t i) const { return coords_[i]; }

  /// Representative with the first nonzero coordinate equal to 1.
  ProjectivePoint canonical() const;
  /// Representative scaled by 1/coords[i]; requires coords[i] != 0.
  ProjectivePoint scaled_to_one(std::size_t i) const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  std::vector<Coefficient> coords_;
};

/// s distinct points of P^n, n >= 2 (n >= 1 is tolerated for sub-problems).
class PointSet {
 public:
  PointSet(std::size_t n, std::vector<ProjectivePoint> points);

  std::size_t n() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }

  PolyRing ring() const { return PolyRing::projective(n_); }
  /// (n+1) x s matrix with the points as columns.
  QMatrix coordinate_matrix() const;
  /// A p for every point p.
  PointSet transformed(const QMatrix& a) const;

 private:
  std::size_t n_;
  std::vector<ProjectivePoint> points_;
};

/// Point-set text: "n s", then s rows of n+1 rationals; '#' starts a comment.
PointSet parse_points(std::string_view text);
std::string format_points(const PointSet& points);

/// s <= n: the points span a P^{s-1}. s >= n+1: every n+1 of them are
/// linearly independent.
bool glp_check(const PointSet& points);

/// Some s-1 points span a hyperplane H and are in general linear position in
/// H, and the remaining point is off H. Requires s >= n+2.
bool hyperplane_position_check(const PointSet& points);

/// n independent linear forms vanishing at p, read from a kernel basis.
Ideal vanishing_ideal_point(const ProjectivePoint& p, const PolyRing& ring);

/// Left fold of intersect over the point ideals, in input order.
Ideal ideal_of_points(const PointSet& points);

struct FrameNormalization {
  QMatrix change;           // A with normalized = A(points)
  PointSet normalized;      // e_0..e_n, (1:...:1), then points with last coordinate 1
};

/// Moves the first n+2 points to the standard projective frame.
/// Requires s >= n+2 and general linear position (throws GlpViolation).
FrameNormalization normalize_frame(const PointSet& points);

/// Quadrics g_ij = x_i x_j + sum_t alpha_ij^(t) x_t x_n generating the ideal of
/// n+2 <= s <= 2n points in general linear position and standard frame.
struct IgpGenerators {
  std::size_t n = 0;
  std::size_t s = 0;
  /// Range of t: [t_first, n-1], of size s-n-1.
  std::size_t t_first = 0;
  std::vector<std::pair<std::size_t, std::size_t>> lambda;
  /// alpha[(i,j)][t - t_first]
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Coefficient>> alpha;
  std::vector<Polynomial> generators;

  const Coefficient& coefficient(std::size_t i, std::size_t j, std::size_t t) const {
    return alpha.at({i, j}).at(t - t_first);
  }
};

IgpGenerators igp_construct(const PointSet& points);

/// True when the first n+2 points are e_0, ..., e_n, (1:...:1) and every
/// further point has a nonzero last coordinate.
bool is_standard_frame(const PointSet& points);

/// (x_i x_j - x_{n-2} x_{n-1}, x_i x_n : 0 <= i < j <= n-1) for n >= 3.
Ideal hyperplane_standard_ideal(std::size_t n);

/// Coordinate points of {x_n = 0}, its unit point, and (0:...:0:1).
PointSet hyperplane_standard_configuration(std::size_t n);

/// e_0, ..., e_n followed by (1:...:1).
PointSet standard_frame(std::size_t n);

/// The first s coordinate points of P^n.
PointSet coordinate_points(std::size_t n, std::size_t s);

}  // namespace aluffi
