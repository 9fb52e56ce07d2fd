// Compiled with -mavx2; only reached through the dispatch table after a
// CPUID check.
#include <immintrin.h>

#include "aluffi/kernels.hpp"

namespace aluffi::kernels {

namespace {

static_assert(sizeof(Monomial::exp) == 32, "exponent lanes must fill one ymm register");

inline __m256i load(const Monomial& m) {
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(m.exp.data()));
}

// a | b  <=>  max(a, b) == b lane-wise.
inline bool divides_v(__m256i a, __m256i b) {
  const __m256i eq = _mm256_cmpeq_epi16(_mm256_max_epu16(a, b), b);
  return _mm256_movemask_epi8(eq) == -1;
}

inline std::uint32_t lane_sum(__m256i v) {
  // Widen to 32 bits first: exponents are unsigned and may exceed 2^15.
  const __m256i lo = _mm256_cvtepu16_epi32(_mm256_castsi256_si128(v));
  const __m256i hi = _mm256_cvtepu16_epi32(_mm256_extracti128_si256(v, 1));
  const __m256i sum8 = _mm256_add_epi32(lo, hi);
  __m128i s = _mm_add_epi32(_mm256_castsi256_si128(sum8), _mm256_extracti128_si256(sum8, 1));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
}

std::ptrdiff_t find_divisor(std::span<const Monomial> divisors, const Monomial& m) {
  const __m256i target = load(m);
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i].deg > m.deg) continue;
    if (divides_v(load(divisors[i]), target)) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

std::ptrdiff_t find_multiple(std::span<const Monomial> multiples, const Monomial& m) {
  const __m256i probe = load(m);
  for (std::size_t i = 0; i < multiples.size(); ++i) {
    if (m.deg > multiples[i].deg) continue;
    if (divides_v(probe, load(multiples[i]))) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

std::size_t count_standard(std::span<const Monomial> candidates, std::span<const Monomial> divisors) {
  std::size_t count = 0;
  for (const auto& c : candidates)
    if (find_divisor(divisors, c) < 0) ++count;
  return count;
}

void lcm_batch(const Monomial& m, std::span<const Monomial> others, std::span<Monomial> out) {
  const __m256i a = load(m);
  for (std::size_t i = 0; i < others.size(); ++i) {
    const __m256i l = _mm256_max_epu16(a, load(others[i]));
    _mm256_store_si256(reinterpret_cast<__m256i*>(out[i].exp.data()), l);
    out[i].deg = lane_sum(l);
  }
}

}  // namespace

namespace detail {
const Table kAvx2Table{Isa::avx2, &find_divisor, &find_multiple, &count_standard, &lcm_batch};
}

}  // namespace aluffi::kernels
