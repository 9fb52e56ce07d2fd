#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aluffi/ideal.hpp"
#include "aluffi/polynomial.hpp"

namespace aluffi {

/// Row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(PolyRing ring, std::size_t rows, std::size_t cols);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

  const PolyRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  PolyMatrix transpose() const;
  PolyMatrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

 private:
  PolyRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Entry (i, j) = d gens[i] / d x_j.
PolyMatrix jacobian_matrix(std::span<const Polynomial> gens);

/// Cofactor expansion starting from the sparsest rows, memoized on the set
/// of columns still available.
Polynomial determinant(const PolyMatrix& m);

/// All r x r minors, row subsets outer and column subsets inner, both
/// lexicographic. Zero minors are kept so the index is recoverable.
std::vector<Polynomial> all_minors(const PolyMatrix& m, std::size_t r);

struct CriticalData {
  std::size_t r = 0;
  std::vector<Polynomial> minors;     // nonzero minors in enumeration order
  Ideal critical_ideal;               // I_r(Θ), on minimal generators
  bool equals_power = false;          // I_r(Θ) == 𝔪^r
  std::size_t mu_critical = 0;
};

/// I_r of the Jacobian matrix of J's generators.
CriticalData critical_ideal(const Ideal& j, std::size_t r);

/// (J, I_r(Θ)) on minimal generators.
Ideal jacobian_ideal(const Ideal& j, std::size_t r);

/// 𝔪^r ⊆ (J, I_r(Θ)).
bool jacobian_contains_power(const Ideal& j, std::size_t r);

struct VvComponent {
  unsigned t = 0;
  std::vector<Polynomial> intersection;  // generators of J ∩ I^t
  bool vv_zero = true;
  std::optional<Polynomial> witness;     // in J ∩ I^t but not in J I^{t-1}
};

/// Degree-t piece (J ∩ I^t) / (J I^{t-1}). Requires J ⊆ I and t >= 2.
VvComponent vv_component(const Ideal& j, const Ideal& i, unsigned t);

enum class Verdict {
  torsion_free,          // unconditional: I = (J, 𝔪^r) with J generated in degree <= r
  torsion_free_up_to,    // every checked degree vanished
  torsion,               // a degree with a certified witness
};

struct TorsionDegree {
  unsigned t = 0;
  bool vv_zero = true;
  std::optional<Polynomial> witness;
};

struct TorsionReport {
  Ideal j;
  Ideal i;
  std::optional<std::size_t> r;
  unsigned t_max = 2;
  bool fast_path = false;
  std::vector<TorsionDegree> degrees;
  Verdict verdict = Verdict::torsion_free_up_to;
  /// Degree of the first nonvanishing component when verdict == torsion.
  unsigned torsion_degree = 0;

  /// "torsion-free", "torsion-free-up-to-<t_max>", "torsion-at-<t>".
  std::string verdict_label() const;
  bool torsion_found() const { return verdict == Verdict::torsion; }
};

/// True when I = (J, 𝔪^r) and every minimal generator of J has degree <= r.
/// Then J ∩ I^t = J I^{t-1} for all t.
bool power_criterion_applies(const Ideal& j, const Ideal& i, std::size_t r);

/// Checks VV degrees 2..t_max, stopping at the first nonzero one. When
/// `fast_path_r` is given and power_criterion_applies, no intersections are
/// computed and the verdict is unconditional.
TorsionReport torsion_free_check(const Ideal& j, const Ideal& i, unsigned t_max,
                                 std::optional<std::size_t> fast_path_r = std::nullopt);

}  // namespace aluffi
