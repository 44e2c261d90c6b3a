#include "kernels_impl.hpp"

namespace charkit::simd {
namespace {

void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c,
                     std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t t = y[i] + static_cast<std::uint64_t>(c) * x[i];
    y[i] = static_cast<std::uint32_t>(t % p);
  }
}

std::uint32_t dot_mod_scalar(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                             std::uint32_t p) {
  std::uint64_t acc = 0;
  std::size_t pending = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += static_cast<std::uint64_t>(a[i]) * b[i];
    if (++pending == kDotReduceInterval) {
      acc %= p;
      pending = 0;
    }
  }
  return static_cast<std::uint32_t>(acc % p);
}

void axpy_i32_scalar(std::int32_t* y, const std::int32_t* x, std::size_t n, std::int32_t c) {
  const auto uc = static_cast<std::uint32_t>(c);
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<std::int32_t>(static_cast<std::uint32_t>(y[i]) +
                                     uc * static_cast<std::uint32_t>(x[i]));
}

void and_words_scalar(std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] &= b[i];
}

void or_words_scalar(std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] |= b[i];
}

bool subset_words_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar",        axpy_mod_scalar, dot_mod_scalar, axpy_i32_scalar,
                                 and_words_scalar, or_words_scalar, subset_words_scalar};
  return table;
}

}  // namespace charkit::simd
