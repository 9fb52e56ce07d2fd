#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aluffi/coefficient.hpp"
#include "aluffi/linalg.hpp"
#include "aluffi/monomial.hpp"
#include "aluffi/ring.hpp"

namespace aluffi {

struct Term {
  Coefficient coef;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Canonical sparse polynomial: nonzero terms sorted strictly descending in
/// the ring's order. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(PolyRing ring) : ring_(ring) {}

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(PolyRing ring, std::vector<Term> terms);
  static Polynomial constant(PolyRing ring, const Coefficient& c);
  static Polynomial variable(PolyRing ring, std::size_t i);
  static Polynomial monomial(PolyRing ring, const Monomial& m, const Coefficient& c = 1);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.deg == 0); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coefficient& leading_coefficient() const { return leading_term().coef; }

  /// Maximum total degree of a term; -1 for zero.
  int total_degree() const;
  /// Zero counts as homogeneous.
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Same polynomial re-sorted under another order of the same variables.
  Polynomial reordered(TermOrder order) const;
  /// Scales so the leading coefficient is 1. Zero stays zero.
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b);
  Polynomial& operator*=(const Coefficient& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Coefficient& c) { return a *= c; }

  /// c * m * this.
  Polynomial mul_term(const Coefficient& c, const Monomial& m) const;
  /// this - c * m * g, one merge pass.
  Polynomial sub_mul_term(const Coefficient& c, const Monomial& m, const Polynomial& g) const;

  Coefficient evaluate(std::span<const Coefficient> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  void check_ring(const Polynomial& b) const;

  PolyRing ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

/// Ring-checked arithmetic; throws RingMismatch.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// Formal derivative with respect to x_i.
Polynomial partial_derivative(const Polynomial& f, std::size_t i);

/// f(A x), i.e. x_i -> sum_j A(i, j) x_j. A must be invertible.
Polynomial substitute_linear(const Polynomial& f, const QMatrix& a);

/// All monomials of total degree d, descending in the ring's order.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, unsigned d);

/// Canonical text: terms in ring order, "*" between factors, "^" for powers.
std::string format_poly(const Polynomial& f);

/// Recursive-descent parser over + - * ^ and parentheses. Variables are x0..x{n}.
Polynomial parse_poly(std::string_view text, const PolyRing& ring);

}  // namespace aluffi
