#include "aluffi/kernels.hpp"

namespace aluffi::kernels {

namespace {

std::ptrdiff_t find_divisor(std::span<const Monomial> divisors, const Monomial& m) {
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (divides(divisors[i], m)) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::ptrdiff_t find_multiple(std::span<const Monomial> multiples, const Monomial& m) {
  for (std::size_t i = 0; i < multiples.size(); ++i)
    if (divides(m, multiples[i])) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::size_t count_standard(std::span<const Monomial> candidates, std::span<const Monomial> divisors) {
  std::size_t count = 0;
  for (const auto& c : candidates)
    if (find_divisor(divisors, c) < 0) ++count;
  return count;
}

void lcm_batch(const Monomial& m, std::span<const Monomial> others, std::span<Monomial> out) {
  for (std::size_t i = 0; i < others.size(); ++i) out[i] = lcm(m, others[i]);
}

}  // namespace

namespace detail {
const Table kScalarTable{Isa::scalar, &find_divisor, &find_multiple, &count_standard, &lcm_batch};
}

}  // namespace aluffi::kernels
