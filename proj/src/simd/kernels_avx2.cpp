#include <immintrin.h>

#include <algorithm>

#include "kernels_impl.hpp"

namespace charkit::simd {
namespace {

// Four lanes of (y + c*x) mod p. Residues are < 2^26 so every intermediate is an
// exact double; q may be off by one after rounding and is corrected below.
inline __m128i axpy_mod_lane4(__m128i y, __m128i x, __m256d c, __m256d p, __m256d pinv) {
  const __m256d xd = _mm256_cvtepi32_pd(x);
  const __m256d yd = _mm256_cvtepi32_pd(y);
  const __m256d prod = _mm256_mul_pd(c, xd);
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, pinv));
  __m256d r = _mm256_fnmadd_pd(q, p, prod);
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  r = _mm256_add_pd(r, yd);
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return _mm256_cvttpd_epi32(r);
}

void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c,
                   std::uint32_t p) {
  const __m256d cv = _mm256_set1_pd(static_cast<double>(c));
  const __m256d pv = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m128i y0 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i));
    const __m128i y1 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i + 4));
    const __m128i x0 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
    const __m128i x1 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i + 4));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), axpy_mod_lane4(y0, x0, cv, pv, pinv));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i + 4), axpy_mod_lane4(y1, x1, cv, pv, pinv));
  }
  for (; i + 4 <= n; i += 4) {
    const __m128i y0 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i));
    const __m128i x0 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), axpy_mod_lane4(y0, x0, cv, pv, pinv));
  }
  for (; i < n; ++i) {
    const std::uint64_t t = y[i] + static_cast<std::uint64_t>(c) * x[i];
    y[i] = static_cast<std::uint32_t>(t % p);
  }
}

std::uint32_t dot_mod_avx2(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                           std::uint32_t p) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  while (i + 4 <= n) {
    __m256i acc = _mm256_setzero_si256();
    // Each lane receives one product per step; kDotReduceInterval steps cannot overflow.
    const std::size_t block_end = std::min(n - (n - i) % 4, i + 4 * kDotReduceInterval);
    for (; i < block_end; i += 4) {
      const __m256i av =
          _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
      const __m256i bv =
          _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
      acc = _mm256_add_epi64(acc, _mm256_mul_epu32(av, bv));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (std::uint64_t lane : lanes) total = (total + lane % p) % p;
  }
  for (; i < n; ++i) total = (total + static_cast<std::uint64_t>(a[i]) * b[i] % p) % p;
  return static_cast<std::uint32_t>(total);
}

void axpy_i32_avx2(std::int32_t* y, const std::int32_t* x, std::size_t n, std::int32_t c) {
  const __m256i cv = _mm256_set1_epi32(c);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i),
                        _mm256_add_epi32(yv, _mm256_mullo_epi32(cv, xv)));
  }
  const auto uc = static_cast<std::uint32_t>(c);
  for (; i < n; ++i)
    y[i] = static_cast<std::int32_t>(static_cast<std::uint32_t>(y[i]) +
                                     uc * static_cast<std::uint32_t>(x[i]));
}

void and_words_avx2(std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i bv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), _mm256_and_si256(av, bv));
  }
  for (; i < n; ++i) a[i] &= b[i];
}

void or_words_avx2(std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i bv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), _mm256_or_si256(av, bv));
  }
  for (; i < n; ++i) a[i] |= b[i];
}

bool subset_words_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i bv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // andnot(b, a) = ~b & a
    if (!_mm256_testz_si256(_mm256_andnot_si256(bv, av), _mm256_set1_epi64x(-1))) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

const KernelTable& avx2_kernels_compiled() {
  static const KernelTable table{"avx2",         axpy_mod_avx2, dot_mod_avx2,     axpy_i32_avx2,
                                 and_words_avx2, or_words_avx2, subset_words_avx2};
  return table;
}

}  // namespace charkit::simd
