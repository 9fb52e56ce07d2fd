#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace aluffi {

/// Upper bound on the number of ring variables. Exponent vectors are packed
/// into 16 x uint16 lanes so a whole monomial fits one 256-bit register.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with a cached total degree. Lanes at index >= num_vars
/// of the owning ring are always zero.
struct Monomial {
  alignas(32) std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial variable(std::size_t i, std::uint16_t power = 1);

  std::uint16_t operator[](std::size_t i) const { return exp[i]; }
  void set(std::size_t i, std::uint16_t e);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

// Scalar single-monomial helpers. The batch scans in kernels.hpp are the
// dispatched hot paths; these stay inline so the compiler can vectorize.

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

Monomial multiply(const Monomial& a, const Monomial& b);

/// b / a; requires divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i) q.exp[i] = static_cast<std::uint16_t>(b.exp[i] - a.exp[i]);
  q.deg = b.deg - a.deg;
  return q;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
    d += m.exp[i];
  }
  m.deg = d;
  return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

/// Sum of exponents over variables [first, last).
inline std::uint32_t block_degree(const Monomial& m, std::size_t first, std::size_t last) {
  std::uint32_t d = 0;
  for (std::size_t i = first; i < last; ++i) d += m.exp[i];
  return d;
}

/// "x0^2*x1", "1" for the empty monomial.
std::string format_monomial(const Monomial& m, std::size_t num_vars);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace aluffi
