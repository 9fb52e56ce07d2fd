#include "aluffi/monomial.hpp"

#include <limits>

#include "aluffi/errors.hpp"

namespace aluffi {

Monomial Monomial::variable(std::size_t i, std::uint16_t power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint16_t e) {
  if (i >= kMaxVars) throw PreconditionError("variable index out of range");
  deg = deg - exp[i] + e;
  exp[i] = e;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  if (a.deg + b.deg > std::numeric_limits<std::uint16_t>::max())
    throw PreconditionError("monomial degree overflow");
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  m.deg = a.deg + b.deg;
  return m;
}

std::string format_monomial(const Monomial& m, std::size_t num_vars) {
  std::string out;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
    if (m.exp[i] > 1) {
      out += '^';
      out += std::to_string(m.exp[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  // FNV-1a over the packed lanes.
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exp) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace aluffi
