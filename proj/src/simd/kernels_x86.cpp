#include "swforge/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include <algorithm>

namespace swforge::simd {
namespace {

inline std::uint8_t add_sat(std::uint8_t a, std::uint8_t b) {
  const unsigned s = unsigned{a} + unsigned{b};
  return static_cast<std::uint8_t>(s > 255 ? 255 : s);
}

// SSE2 is part of the x86-64 baseline.

void sse2_min_plus_broadcast(std::uint8_t* acc, const std::uint8_t* row, std::uint8_t offset, std::size_t len) {
  const __m128i off = _mm_set1_epi8(static_cast<char>(offset));
  std::size_t i = 0;
  for (; i + 16 <= len; i += 16) {
    const __m128i r = _mm_loadu_si128(reinterpret_cast<const __m128i*>(row + i));
    const __m128i a = _mm_loadu_si128(reinterpret_cast<const __m128i*>(acc + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(acc + i), _mm_min_epu8(a, _mm_adds_epu8(r, off)));
  }
  for (; i < len; ++i) acc[i] = std::min(acc[i], add_sat(row[i], offset));
}

void sse2_min_of_sums(std::uint8_t* acc, const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 16 <= len; i += 16) {
    const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i));
    const __m128i y = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i));
    const __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(acc + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(acc + i), _mm_min_epu8(c, _mm_adds_epu8(x, y)));
  }
  for (; i < len; ++i) acc[i] = std::min(acc[i], add_sat(a[i], b[i]));
}

// Unsigned 64-bit overflow: sum < addend. SSE2 has no 64-bit compare, so the
// carry is recovered from the top bits: carry = (a & b) | ((a | b) & ~sum).
bool sse2_accumulate_u64(std::uint64_t* dst, const std::uint64_t* src, std::size_t len) {
  __m128i carry = _mm_setzero_si128();
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m128i a = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
    const __m128i b = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
    const __m128i s = _mm_add_epi64(a, b);
    carry = _mm_or_si128(carry, _mm_or_si128(_mm_and_si128(a, b), _mm_andnot_si128(s, _mm_or_si128(a, b))));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), s);
  }
  bool ok = (_mm_movemask_epi8(carry) & 0x8080) == 0;
  for (; i < len; ++i) ok &= !__builtin_add_overflow(dst[i], src[i], &dst[i]);
  return ok;
}

__attribute__((target("avx2"))) void avx2_min_plus_broadcast(std::uint8_t* acc, const std::uint8_t* row,
                                                            std::uint8_t offset, std::size_t len) {
  const __m256i off = _mm256_set1_epi8(static_cast<char>(offset));
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_min_epu8(a, _mm256_adds_epu8(r, off)));
  }
  for (; i < len; ++i) acc[i] = std::min(acc[i], add_sat(row[i], offset));
}

__attribute__((target("avx2"))) void avx2_min_of_sums(std::uint8_t* acc, const std::uint8_t* a, const std::uint8_t* b,
                                                     std::size_t len) {
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_min_epu8(c, _mm256_adds_epu8(x, y)));
  }
  for (; i < len; ++i) acc[i] = std::min(acc[i], add_sat(a[i], b[i]));
}

__attribute__((target("avx2"))) bool avx2_accumulate_u64(std::uint64_t* dst, const std::uint64_t* src,
                                                        std::size_t len) {
  __m256i carry = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i s = _mm256_add_epi64(a, b);
    carry = _mm256_or_si256(
        carry, _mm256_or_si256(_mm256_and_si256(a, b), _mm256_andnot_si256(s, _mm256_or_si256(a, b))));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
  }
  bool ok = _mm256_movemask_pd(_mm256_castsi256_pd(carry)) == 0;
  for (; i < len; ++i) ok &= !__builtin_add_overflow(dst[i], src[i], &dst[i]);
  return ok;
}

constexpr KernelSet kSse2{"sse2", &sse2_min_plus_broadcast, &sse2_min_of_sums, &sse2_accumulate_u64};
constexpr KernelSet kAvx2{"avx2", &avx2_min_plus_broadcast, &avx2_min_of_sums, &avx2_accumulate_u64};

}  // namespace

namespace detail {

const KernelSet* sse2_kernels() noexcept { return &kSse2; }

const KernelSet* avx2_kernels() noexcept { return cpu_has_avx2() ? &kAvx2 : nullptr; }

bool cpu_has_avx2() noexcept {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}

}  // namespace detail
}  // namespace swforge::simd

#else

namespace swforge::simd::detail {
const KernelSet* sse2_kernels() noexcept { return nullptr; }
const KernelSet* avx2_kernels() noexcept { return nullptr; }
bool cpu_has_avx2() noexcept { return false; }
}  // namespace swforge::simd::detail

#endif
