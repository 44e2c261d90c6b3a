#pragma once

#include "charkit/simd/kernels.hpp"

namespace charkit::simd {

// Products are < 2^52, so 2048 of them fit in a 64-bit accumulator with room.
inline constexpr std::size_t kDotReduceInterval = 2048;

#if defined(CHARKIT_WITH_AVX2)
const KernelTable& avx2_kernels_compiled();
#endif

}  // namespace charkit::simd
