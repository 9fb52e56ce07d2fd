#include "aluffi/ideal.hpp"

#include <algorithm>
#include <unordered_map>

#include "aluffi/errors.hpp"
#include "aluffi/kernels.hpp"
#include "aluffi/linalg.hpp"

namespace aluffi {

namespace {

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring().num_vars() != b.ring().num_vars()) throw RingMismatch("ideal operands");
}

// x_i -> x_{i+offset}; offset is +1 or -1.
Polynomial shift_variables(const Polynomial& f, const PolyRing& target, int offset) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (t.mono.exp[i] == 0) continue;
      const auto j = static_cast<std::ptrdiff_t>(i) + offset;
      if (j < 0 || static_cast<std::size_t>(j) >= target.num_vars())
        throw PreconditionError("variable shift out of range");
      m.set(static_cast<std::size_t>(j), t.mono.exp[i]);
    }
    terms.push_back({t.coef, m});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

// Monomial generators reduced to a minimal set, monic, in ascending degree
// then input order.
std::vector<Polynomial> minimal_monomials(const PolyRing& ring, const std::vector<Polynomial>& gens) {
  std::vector<Monomial> monos;
  for (const auto& g : gens) monos.push_back(g.leading_monomial());
  std::stable_sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> kept;
  for (const auto& m : monos)
    if (kernels::active().find_divisor(kept, m) < 0) kept.push_back(m);
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const auto& m : kept) out.push_back(Polynomial::monomial(ring, m));
  return out;
}

}  // namespace

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> generators) : ring_(ring), cache_(std::make_shared<Cache>()) {
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    if (g.ring().num_vars() != ring.num_vars()) throw RingMismatch("ideal generator");
    if (g.is_zero()) continue;
    generators_.push_back(g.ring() == ring ? std::move(g) : g.reordered(ring.order()));
  }
}

Ideal Ideal::maximal(PolyRing ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool Ideal::is_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

int Ideal::max_generator_degree() const {
  int d = -1;
  for (const auto& g : generators_) d = std::max(d, g.total_degree());
  return d;
}

const GroebnerBasis& Ideal::groebner(TermOrder order) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->bases.find(order); it != cache_->bases.end()) return *it->second;
  }
  std::shared_ptr<const GroebnerBasis> computed;
  if (generators_.empty()) {
    computed = std::make_shared<const GroebnerBasis>(GroebnerBasis{order, {}, true});
  } else {
    computed = std::make_shared<const GroebnerBasis>(reduce_basis(buchberger(generators_, order)));
  }
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(order, std::move(computed));
  return *it->second;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const Ideal ma = minimalize(a);
  const Ideal mb = minimalize(b);
  std::vector<Polynomial> gens;
  gens.reserve(ma.generators().size() * mb.generators().size());
  for (const auto& f : ma.generators())
    for (const auto& g : mb.generators()) gens.push_back(f * g.reordered(f.ring().order()));
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned t) {
  if (t == 0) return Ideal::unit(a.ring());
  if (t == 1) return a;
  const Ideal m = minimalize(a);
  const auto& g = m.generators();
  if (g.empty()) return Ideal::zero(a.ring());
  // Non-decreasing index tuples of length t.
  std::vector<std::size_t> idx(t, 0);
  std::vector<Polynomial> gens;
  for (;;) {
    Polynomial p = g[idx[0]];
    for (unsigned k = 1; k < t; ++k) p = p * g[idx[k]];
    gens.push_back(std::move(p));
    std::size_t k = t;
    while (k > 0 && idx[k - 1] + 1 == g.size()) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t r = k; r < t; ++r) idx[r] = idx[k - 1];
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect_monomial(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (!a.is_monomial() || !b.is_monomial()) throw PreconditionError("intersect_monomial needs monomial ideals");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators())
      gens.push_back(Polynomial::monomial(a.ring(), lcm(f.leading_monomial(), g.leading_monomial())));
  return Ideal(a.ring(), minimal_monomials(a.ring(), gens));
}

Ideal intersect_by_elimination(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  const PolyRing big(a.ring().num_vars() + 1, TermOrder::elimination(1));
  const Polynomial w = Polynomial::variable(big, 0);
  const Polynomial one_minus_w = Polynomial::constant(big, 1) - w;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(w * shift_variables(f, big, +1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_w * shift_variables(g, big, +1));
  const GroebnerBasis gb = reduce_basis(buchberger(gens, big.order()));
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    // Elimination order: w-free leading monomial means w-free polynomial.
    if (g.leading_monomial().exp[0] != 0) continue;
    out.push_back(shift_variables(g, a.ring(), -1));
  }
  return Ideal(a.ring(), std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.is_monomial() && b.is_monomial()) return intersect_monomial(a, b);
  return intersect_by_elimination(a, b);
}

bool contains(const Ideal& a, const Polynomial& f) {
  if (f.ring().num_vars() != a.ring().num_vars()) throw RingMismatch("membership test");
  if (f.is_zero()) return true;
  const auto& gb = a.groebner();
  if (gb.elements.empty()) return false;
  return normal_form(f.reordered(gb.order), gb.elements).is_zero();
}

bool ideal_contains_ideal(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Polynomial& g) { return contains(a, g); });
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const TermOrder order = a.ring().order();
  return a.groebner(order).elements == b.groebner(order).elements;
}

MinimalGenerators minimal_generators(const Ideal& a) {
  if (!a.is_homogeneous()) throw PreconditionError("minimal_generators requires homogeneous generators");
  const auto& ring = a.ring();
  if (a.is_zero()) return {};
  if (a.is_monomial()) {
    auto gens = minimal_monomials(ring, a.generators());
    const std::size_t mu = gens.size();
    return {std::move(gens), mu};
  }
  unsigned lo = ~0u, hi = 0;
  for (const auto& g : a.generators()) {
    lo = std::min<unsigned>(lo, static_cast<unsigned>(g.total_degree()));
    hi = std::max<unsigned>(hi, static_cast<unsigned>(g.total_degree()));
  }
  MinimalGenerators out;
  std::vector<Monomial> prev_monos;
  std::vector<EchelonBasis::SparseRow> prev_rows;
  for (unsigned d = lo; d <= hi; ++d) {
    const auto monos = monomials_of_degree(ring, d);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
    EchelonBasis space(monos.size());
    // R_1 * A_{d-1}
    for (const auto& row : prev_rows) {
      for (std::size_t v = 0; v < ring.num_vars(); ++v) {
        if (space.rank() == space.dimension()) break;
        EchelonBasis::SparseRow shifted;
        shifted.reserve(row.size());
        for (const auto& [c, x] : row) shifted.emplace_back(index.at(multiply(prev_monos[c], Monomial::variable(v))), x);
        space.insert(shifted);
      }
    }
    for (const auto& g : a.generators()) {
      if (g.total_degree() != static_cast<int>(d)) continue;
      EchelonBasis::SparseRow vec;
      for (const auto& t : g.terms()) vec.emplace_back(index.at(t.mono), t.coef);
      if (space.insert(vec)) out.generators.push_back(g);
    }
    prev_monos = monos;
    prev_rows = space.rows();
  }
  out.mu = out.generators.size();
  return out;
}

Ideal minimalize(const Ideal& a) {
  if (a.is_zero() || !a.is_homogeneous()) return a;
  return Ideal(a.ring(), minimal_generators(a).generators);
}

std::size_t hilbert_function(const Ideal& a, unsigned d) {
  if (!a.is_homogeneous()) throw PreconditionError("hilbert_function requires homogeneous generators");
  const auto monos = monomials_of_degree(a.ring(), d);
  if (a.is_zero()) return monos.size();
  const auto lms = a.groebner().leading_monomials();
  return kernels::active().count_standard(monos, lms);
}

Ideal irrelevant_power(const PolyRing& ring, unsigned r) {
  if (r == 0) throw PreconditionError("irrelevant_power requires r >= 1");
  std::vector<Polynomial> gens;
  for (const auto& m : monomials_of_degree(ring, r)) gens.push_back(Polynomial::monomial(ring, m));
  return Ideal(ring, std::move(gens));
}

}  // namespace aluffi
