#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aluffi/polynomial.hpp"
#include "aluffi/term_order.hpp"

namespace aluffi {

/// Monic generators of an ideal forming a Groebner basis for `order`. All
/// elements live in a ring whose default order is `order`.
struct GroebnerBasis {
  TermOrder order = TermOrder::grevlex();
  std::vector<Polynomial> elements;
  bool reduced = false;

  std::vector<Monomial> leading_monomials() const;
};

struct BuchbergerOptions {
  /// Coprime-leading-monomial and chain criteria. Disabling them only costs time.
  bool use_criteria = true;
  /// Abort with DegreeCapExceeded when an S-pair lcm exceeds this degree.
  std::optional<unsigned> degree_cap;
};

/// Full reduction of f by G in f's ring order: the leading-most reducible
/// term is reduced first, by the first element of G (in list order) whose
/// leading monomial divides it. G must live in f's ring.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> g);

/// Same, after re-sorting f and G under `order`. The result is in `order`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> g, TermOrder order);

/// lcm-cancelling combination of f and g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, then smallest lcm in `order`, then pair indices). Zero generators
/// are dropped; throws PreconditionError if none remain.
GroebnerBasis buchberger(std::span<const Polynomial> gens, TermOrder order, const BuchbergerOptions& options = {});

/// The unique reduced Groebner basis of the ideal generated by `gb`, sorted
/// descending by leading monomial.
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

/// Minimal generators of the initial ideal. Requires gb.reduced.
std::vector<Monomial> initial_ideal(const GroebnerBasis& gb);

/// Checks that every S-polynomial of basis pairs reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> g);

/// RAII degree cap applied to every Buchberger run on this thread that does
/// not pass its own cap.
class ScopedDegreeCap {
 public:
  explicit ScopedDegreeCap(std::optional<unsigned> cap);
  ~ScopedDegreeCap();
  ScopedDegreeCap(const ScopedDegreeCap&) = delete;
  ScopedDegreeCap& operator=(const ScopedDegreeCap&) = delete;

  static std::optional<unsigned> current();

 private:
  std::optional<unsigned> previous_;
};

}  // namespace aluffi
