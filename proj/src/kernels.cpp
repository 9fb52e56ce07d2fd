#include "aluffi/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "aluffi/errors.hpp"

namespace aluffi::kernels {

namespace {

const Table* detect() {
  if (const char* forced = std::getenv("ALUFFI_ISA"); forced != nullptr && std::string(forced) == "scalar")
    return &detail::kScalarTable;
#if defined(ALUFFI_HAVE_AVX2)
  if (supported(Isa::avx2)) return &detail::kAvx2Table;
#endif
  return &detail::kScalarTable;
}

std::atomic<const Table*>& slot() {
  static std::atomic<const Table*> current{detect()};
  return current;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(ALUFFI_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const Table& table(Isa isa) {
  if (!supported(isa)) throw PreconditionError("ISA " + std::string(isa_name(isa)) + " not supported on this CPU");
#if defined(ALUFFI_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::kAvx2Table;
#endif
  return detail::kScalarTable;
}

const Table& active() { return *slot().load(std::memory_order_acquire); }

void select(Isa isa) { slot().store(&table(isa), std::memory_order_release); }

}  // namespace aluffi::kernels
