#include "swforge/simd.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

#include <algorithm>

namespace swforge::simd {
namespace {

inline std::uint8_t add_sat(std::uint8_t a, std::uint8_t b) {
  const unsigned s = unsigned{a} + unsigned{b};
  return static_cast<std::uint8_t>(s > 255 ? 255 : s);
}

void neon_min_plus_broadcast(std::uint8_t* acc, const std::uint8_t* row, std::uint8_t offset, std::size_t len) {
  const uint8x16_t off = vdupq_n_u8(offset);
  std::size_t i = 0;
  for (; i + 16 <= len; i += 16) vst1q_u8(acc + i, vminq_u8(vld1q_u8(acc + i), vqaddq_u8(vld1q_u8(row + i), off)));
  for (; i < len; ++i) acc[i] = std::min(acc[i], add_sat(row[i], offset));
}

void neon_min_of_sums(std::uint8_t* acc, const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 16 <= len; i += 16)
    vst1q_u8(acc + i, vminq_u8(vld1q_u8(acc + i), vqaddq_u8(vld1q_u8(a + i), vld1q_u8(b + i))));
  for (; i < len; ++i) acc[i] = std::min(acc[i], add_sat(a[i], b[i]));
}

bool neon_accumulate_u64(std::uint64_t* dst, const std::uint64_t* src, std::size_t len) {
  uint64x2_t carry = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const uint64x2_t a = vld1q_u64(dst + i);
    const uint64x2_t s = vaddq_u64(a, vld1q_u64(src + i));
    carry = vorrq_u64(carry, vcltq_u64(s, a));
    vst1q_u64(dst + i, s);
  }
  bool ok = (vgetq_lane_u64(carry, 0) | vgetq_lane_u64(carry, 1)) == 0;
  for (; i < len; ++i) ok &= !__builtin_add_overflow(dst[i], src[i], &dst[i]);
  return ok;
}

constexpr KernelSet kNeon{"neon", &neon_min_plus_broadcast, &neon_min_of_sums, &neon_accumulate_u64};

}  // namespace

namespace detail {
const KernelSet* neon_kernels() noexcept { return &kNeon; }
}  // namespace detail
}  // namespace swforge::simd

#else

namespace swforge::simd::detail {
const KernelSet* neon_kernels() noexcept { return nullptr; }
}  // namespace swforge::simd::detail

#endif
