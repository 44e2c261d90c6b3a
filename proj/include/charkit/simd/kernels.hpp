#pragma once

// Data-parallel kernels used by the exact-arithmetic layers.
//
// Every kernel has a portable scalar reference version. On x86-64 an AVX2+FMA
// variant is compiled separately and picked at runtime when the CPU supports
// it. The environment variable CHARKIT_SIMD ("scalar", "avx2" or "auto")
// overrides the choice. All variants must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace charkit::simd {

// Largest modulus accepted by the modular kernels. Products of two residues
// must stay exactly representable in a double.
inline constexpr std::uint32_t kMaxModulus = (1u << 26) - 1;

struct KernelTable {
  const char* name;
  // y[i] = (y[i] + c * x[i]) mod p, all inputs reduced.
  void (*axpy_mod)(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c,
                   std::uint32_t p);
  // (sum a[i] * b[i]) mod p.
  std::uint32_t (*dot_mod)(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                           std::uint32_t p);
  // y[i] += c * x[i] on 32-bit integers (wrapping).
  void (*axpy_i32)(std::int32_t* y, const std::int32_t* x, std::size_t n, std::int32_t c);
  void (*and_words)(std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  void (*or_words)(std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // true iff a & ~b == 0
  bool (*subset_words)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
};

enum class Isa { Scalar, Avx2 };

const KernelTable& scalar_kernels();
// nullptr when the AVX2 variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();

const KernelTable& active();
Isa active_isa();
// Returns false (and leaves the selection unchanged) if the ISA is unavailable.
bool set_active(Isa isa);

std::string_view isa_name(Isa isa);

inline void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
                     std::uint32_t p) {
  active().axpy_mod(y.data(), x.data(), y.size(), c, p);
}

inline std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                             std::uint32_t p) {
  return active().dot_mod(a.data(), b.data(), a.size(), p);
}

inline void axpy_i32(std::span<std::int32_t> y, std::span<const std::int32_t> x, std::int32_t c) {
  active().axpy_i32(y.data(), x.data(), y.size(), c);
}

}  // namespace charkit::simd
