#pragma once

// Batch monomial scans with a scalar reference implementation and an AVX2
// variant. The active table is picked once from CPUID; ALUFFI_ISA=scalar in
// the environment (or select()) forces the reference path. Both variants
// must return identical results on every input.

#include <cstddef>
#include <span>
#include <string_view>

#include "aluffi/monomial.hpp"

namespace aluffi::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

struct Table {
  Isa isa;
  /// Index of the first element of `divisors` dividing `m`, or -1.
  std::ptrdiff_t (*find_divisor)(std::span<const Monomial> divisors, const Monomial& m);
  /// Index of the first element of `multiples` that `m` divides, or -1.
  std::ptrdiff_t (*find_multiple)(std::span<const Monomial> multiples, const Monomial& m);
  /// Number of `candidates` divisible by no element of `divisors`.
  std::size_t (*count_standard)(std::span<const Monomial> candidates,
                                std::span<const Monomial> divisors);
  /// Elementwise lcm of `m` with each `others[i]`, written to `out[i]`.
  void (*lcm_batch)(const Monomial& m, std::span<const Monomial> others, std::span<Monomial> out);
};

bool supported(Isa isa);

/// Throws PreconditionError when the CPU lacks the requested ISA.
const Table& table(Isa isa);

/// The table used by the library.
const Table& active();

/// Overrides the active table (tests, CLI --isa).
void select(Isa isa);

namespace detail {
extern const Table kScalarTable;
#if defined(ALUFFI_HAVE_AVX2)
extern const Table kAvx2Table;
#endif
}  // namespace detail

}  // namespace aluffi::kernels
