#include "aluffi/jacobian.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "aluffi/errors.hpp"

namespace aluffi {

namespace {

using ColumnMask = std::uint64_t;

// Laplace expansion of the rows `rows[k..]` over the columns in `mask`,
// memoized on the mask (k is implied by its popcount).
class MinorExpander {
 public:
  MinorExpander(const PolyMatrix& m, std::vector<std::size_t> rows) : m_(m), rows_(std::move(rows)) {}

  Polynomial det(ColumnMask mask) {
    const auto width = static_cast<std::size_t>(std::popcount(mask));
    if (width == 0) return Polynomial::constant(m_.ring(), 1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const std::size_t row = rows_[rows_.size() - width];
    Polynomial sum(m_.ring());
    std::size_t position = 0;
    for (ColumnMask rest = mask; rest != 0; rest &= rest - 1, ++position) {
      const auto col = static_cast<std::size_t>(std::countr_zero(rest));
      const Polynomial& entry = m_(row, col);
      if (entry.is_zero()) continue;
      Polynomial sub = det(mask & ~(ColumnMask{1} << col));
      if (sub.is_zero()) continue;
      Polynomial term = entry * sub;
      if (position % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    memo_.emplace(mask, sum);
    return sum;
  }

 private:
  const PolyMatrix& m_;
  std::vector<std::size_t> rows_;
  std::unordered_map<ColumnMask, Polynomial> memo_;
};

template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    fn(std::as_const(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PolyMatrix::PolyMatrix(PolyRing ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring)) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : ring_(entries.empty() ? throw PreconditionError("empty polynomial matrix") : entries.front().ring()),
      rows_(rows),
      cols_(cols),
      entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw PreconditionError("matrix entry count does not match its shape");
  for (const auto& e : entries_)
    if (!(e.ring() == ring_)) throw RingMismatch("matrix entries");
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PolyMatrix PolyMatrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  PolyMatrix s(ring_, rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = (*this)(rows[r], cols[c]);
  return s;
}

PolyMatrix jacobian_matrix(std::span<const Polynomial> gens) {
  if (gens.empty()) throw PreconditionError("jacobian_matrix of an empty generator list");
  const PolyRing ring = gens.front().ring();
  PolyMatrix m(ring, gens.size(), ring.num_vars());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(gens[i].ring() == ring)) throw RingMismatch("jacobian generators");
    if (gens[i].is_zero()) throw PreconditionError("jacobian_matrix of a zero generator");
    for (std::size_t j = 0; j < ring.num_vars(); ++j) m(i, j) = partial_derivative(gens[i], j);
  }
  return m;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 64) throw PreconditionError("determinant: matrix too large");
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  // Expand the sparsest rows first; the row permutation contributes its sign.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto nonzeros = [&](std::size_t r) {
    std::size_t count = 0;
    for (std::size_t c = 0; c < n; ++c) count += m(r, c).is_zero() ? 0 : 1;
    return count;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nonzeros(a) < nonzeros(b); });
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) inversions += order[a] > order[b] ? 1 : 0;
  const ColumnMask all = n == 64 ? ~ColumnMask{0} : (ColumnMask{1} << n) - 1;
  Polynomial det = MinorExpander(m, order).det(all);
  return inversions % 2 == 0 ? det : -det;
}

std::vector<Polynomial> all_minors(const PolyMatrix& m, std::size_t r) {
  if (r == 0 || r > std::min(m.rows(), m.cols())) throw PreconditionError("minor size out of range");
  if (m.cols() > 64) throw PreconditionError("all_minors: too many columns");
  std::vector<Polynomial> out;
  for_each_subset(m.rows(), r, [&](const std::vector<std::size_t>& rows) {
    MinorExpander expander(m, rows);
    for_each_subset(m.cols(), r, [&](const std::vector<std::size_t>& cols) {
      ColumnMask mask = 0;
      for (auto c : cols) mask |= ColumnMask{1} << c;
      out.push_back(expander.det(mask));
    });
  });
  return out;
}

CriticalData critical_ideal(const Ideal& j, std::size_t r) {
  // Theta is taken on a minimal generating set, so redundant generators
  // cannot contribute spurious minors.
  const std::vector<Polynomial> gens = j.is_homogeneous() ? minimal_generators(j).generators : j.generators();
  const PolyRing& ring = j.ring();
  if (r < 1 || r > std::min(gens.size(), ring.num_vars()))
    throw PreconditionError("critical ideal: r = " + std::to_string(r) + " out of range");
  const PolyMatrix theta = jacobian_matrix(gens);
  std::vector<Polynomial> minors;
  for (auto& p : all_minors(theta, r))
    if (!p.is_zero()) minors.push_back(std::move(p));
  const Ideal raw(ring, minors);
  const Ideal power = irrelevant_power(ring, static_cast<unsigned>(r));
  Ideal crit = minimalize(raw);
  const bool equals_power = ideal_contains_ideal(crit, power) && ideal_contains_ideal(power, crit);
  const std::size_t mu = crit.is_homogeneous() ? minimal_generators(crit).mu : crit.generators().size();
  return CriticalData{r, std::move(minors), std::move(crit), equals_power, mu};
}

Ideal jacobian_ideal(const Ideal& j, std::size_t r) {
  return minimalize(ideal_sum(j, critical_ideal(j, r).critical_ideal));
}

bool jacobian_contains_power(const Ideal& j, std::size_t r) {
  return ideal_contains_ideal(jacobian_ideal(j, r), irrelevant_power(j.ring(), static_cast<unsigned>(r)));
}

VvComponent vv_component(const Ideal& j, const Ideal& i, unsigned t) {
  if (t < 2) throw PreconditionError("vv_component needs t >= 2");
  if (!ideal_contains_ideal(i, j)) throw PreconditionError("J is not contained in I");
  VvComponent out;
  out.t = t;
  const Ideal meet = intersect(j, ideal_power(i, t));
  const Ideal denominator = ideal_product(j, ideal_power(i, t - 1));
  out.intersection = meet.generators();
  for (const auto& g : out.intersection) {
    if (!contains(denominator, g)) {
      out.vv_zero = false;
      out.witness = g;
      break;
    }
  }
  return out;
}

bool power_criterion_applies(const Ideal& j, const Ideal& i, std::size_t r) {
  if (r == 0 || !j.is_homogeneous() || j.is_zero()) return false;
  const auto mg = minimal_generators(j);
  for (const auto& g : mg.generators)
    if (static_cast<std::size_t>(g.total_degree()) > r) return false;
  const Ideal power = irrelevant_power(j.ring(), static_cast<unsigned>(r));
  return ideal_contains_ideal(i, power) && ideal_contains_ideal(i, j) &&
         ideal_contains_ideal(ideal_sum(j, power), i);
}

std::string TorsionReport::verdict_label() const {
  switch (verdict) {
    case Verdict::torsion_free:
      return "torsion-free";
    case Verdict::torsion_free_up_to:
      return "torsion-free-up-to-" + std::to_string(t_max);
    case Verdict::torsion:
      return "torsion-at-" + std::to_string(torsion_degree);
  }
  return "?";
}

TorsionReport torsion_free_check(const Ideal& j, const Ideal& i, unsigned t_max,
                                 std::optional<std::size_t> fast_path_r) {
  if (t_max < 2) throw PreconditionError("t_max must be at least 2");
  if (!ideal_contains_ideal(i, j)) throw PreconditionError("J is not contained in I");
  TorsionReport report{j, i, fast_path_r, t_max, false, {}, Verdict::torsion_free_up_to, 0};
  if (fast_path_r && power_criterion_applies(j, i, *fast_path_r)) {
    report.fast_path = true;
    report.verdict = Verdict::torsion_free;
    return report;
  }
  for (unsigned t = 2; t <= t_max; ++t) {
    auto component = vv_component(j, i, t);
    report.degrees.push_back({t, component.vv_zero, component.witness});
    if (!component.vv_zero) {
      report.verdict = Verdict::torsion;
      report.torsion_degree = t;
      break;
    }
  }
  return report;
}

}  // namespace aluffi
