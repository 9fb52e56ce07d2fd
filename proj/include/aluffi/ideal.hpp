#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "aluffi/groebner.hpp"
#include "aluffi/polynomial.hpp"

namespace aluffi {

/// Finitely generated ideal with a per-order memo of reduced Groebner bases.
/// Generators are immutable; copies share the memo.
class Ideal {
 public:
  /// Zero generators are dropped; all generators must live in `ring`
  /// (they are re-sorted if only the order differs).
  Ideal(PolyRing ring, std::vector<Polynomial> generators);

  static Ideal zero(PolyRing ring) { return Ideal(ring, {}); }
  static Ideal unit(PolyRing ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }
  /// The irrelevant maximal ideal (x0, ..., xn).
  static Ideal maximal(PolyRing ring);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_homogeneous() const;
  bool is_monomial() const;
  /// Largest generator degree, -1 for the zero ideal.
  int max_generator_degree() const;

  /// Reduced Groebner basis for `order`, computed once and memoized.
  const GroebnerBasis& groebner(TermOrder order) const;
  const GroebnerBasis& groebner() const { return groebner(ring_.order()); }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<TermOrder, std::shared_ptr<const GroebnerBasis>> bases;
  };

  PolyRing ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

struct MinimalGenerators {
  std::vector<Polynomial> generators;
  std::size_t mu = 0;
};

/// Generator concatenation.
Ideal ideal_sum(const Ideal& a, const Ideal& b);
/// Pairwise products of minimalized generator sets.
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// Degree-t products (with repetition) of minimalized generators; A^0 = (1).
Ideal ideal_power(const Ideal& a, unsigned t);

/// A ∩ B. Monomial ideals use the pairwise-lcm rule; everything else goes
/// through intersect_by_elimination.
Ideal intersect(const Ideal& a, const Ideal& b);
/// w-free part of the reduced basis of w*A + (1-w)*B in an elimination
/// order with the auxiliary variable w greatest.
Ideal intersect_by_elimination(const Ideal& a, const Ideal& b);
/// Generators lcm(m, m') over all pairs of monomial generators.
Ideal intersect_monomial(const Ideal& a, const Ideal& b);

bool contains(const Ideal& a, const Polynomial& f);
/// B ⊆ A.
bool ideal_contains_ideal(const Ideal& a, const Ideal& b);
bool ideal_equal(const Ideal& a, const Ideal& b);

/// Minimal homogeneous generating set, computed degree by degree with exact
/// linear algebra. Requires homogeneous generators.
MinimalGenerators minimal_generators(const Ideal& a);
/// Same ideal on its minimal generators; non-homogeneous ideals pass through.
Ideal minimalize(const Ideal& a);

/// dim_k (R/A)_d, counting standard monomials of the default-order basis.
std::size_t hilbert_function(const Ideal& a, unsigned d);

/// 𝔪^r, generated by all monomials of degree r.
Ideal irrelevant_power(const PolyRing& ring, unsigned r);

}  // namespace aluffi
