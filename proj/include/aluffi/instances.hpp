#pragma once

// Named point configurations and ideals used by the reference suite, the
// CLI and the tests.

#include <string>
#include <vector>

#include "aluffi/ideal.hpp"
#include "aluffi/points.hpp"

namespace aluffi::instances {

/// e0, e1, e2, (1:1:1) in P^2.
PointSet four_points_p2();
/// (0:1:0), (0:0:1), (0:1:1): three points on {x0 = 0}.
PointSet collinear_triple();
/// Standard frame of P^3 plus (-1:2:3:1).
PointSet six_points_p3();
/// Coordinate points of P^4 plus two fixed points, in general linear position.
PointSet seven_points_p4();

/// Ideal on generators given as text in the ring of P^n.
Ideal ideal_from_text(std::size_t n, const std::vector<std::string>& gens);

}  // namespace aluffi::instances
