#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"

namespace charkit::simd {
namespace {

bool cpu_has_avx2() {
#if defined(CHARKIT_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa initial_isa() {
  const bool have_avx2 = avx2_kernels() != nullptr;
  if (const char* env = std::getenv("CHARKIT_SIMD")) {
    const std::string v(env);
    if (v == "scalar") return Isa::Scalar;
    if (v == "avx2" && have_avx2) return Isa::Avx2;
  }
  return have_avx2 ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

const KernelTable* avx2_kernels() {
#if defined(CHARKIT_WITH_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &avx2_kernels_compiled() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  if (selected().load(std::memory_order_relaxed) == Isa::Avx2) return *avx2_kernels();
  return scalar_kernels();
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

bool set_active(Isa isa) {
  if (isa == Isa::Avx2 && avx2_kernels() == nullptr) return false;
  selected().store(isa, std::memory_order_relaxed);
  return true;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

}  // namespace charkit::simd
