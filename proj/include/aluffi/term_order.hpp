#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "aluffi/monomial.hpp"

namespace aluffi {

/// Monomial order with x0 > x1 > ... > xn.
///
/// `elimination(k)` compares the block x0..x{k-1} by grevlex first and breaks
/// ties by grevlex on the remaining variables, so any monomial involving the
/// first block is greater than every monomial free of it.
class TermOrder {
 public:
  enum class Kind { lex, grevlex, elimination };

  static constexpr TermOrder lex() { return TermOrder(Kind::lex, 0); }
  static constexpr TermOrder grevlex() { return TermOrder(Kind::grevlex, 0); }
  static constexpr TermOrder elimination(std::size_t block) { return TermOrder(Kind::elimination, block); }

  /// "lex", "grevlex" (elimination orders are not nameable from the CLI).
  static TermOrder from_name(const std::string& name);

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  std::string name() const;

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend constexpr auto operator<=>(const TermOrder&, const TermOrder&) = default;

 private:
  constexpr TermOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

}  // namespace aluffi
