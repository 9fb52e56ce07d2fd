#pragma once

#include <cstddef>

#include "aluffi/term_order.hpp"

namespace aluffi {

/// k[x0, ..., x{num_vars-1}] over the rationals, with the order used to sort
/// polynomial terms. Two rings are the same ring only if both the variable
/// count and the order agree.
class PolyRing {
 public:
  explicit PolyRing(std::size_t num_vars, TermOrder order = TermOrder::grevlex());

  /// Ring of P^n, i.e. n+1 variables.
  static PolyRing projective(std::size_t n, TermOrder order = TermOrder::grevlex()) {
    return PolyRing(n + 1, order);
  }

  std::size_t num_vars() const { return num_vars_; }
  /// Projective dimension n = num_vars - 1.
  std::size_t n() const { return num_vars_ - 1; }
  TermOrder order() const { return order_; }

  PolyRing with_order(TermOrder order) const { return PolyRing(num_vars_, order); }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  std::size_t num_vars_;
  TermOrder order_;
};

}  // namespace aluffi
