#include <algorithm>

#include "swforge/simd.hpp"

namespace swforge::simd {
namespace {

inline std::uint8_t add_sat(std::uint8_t a, std::uint8_t b) {
  const unsigned s = unsigned{a} + unsigned{b};
  return static_cast<std::uint8_t>(s > 255 ? 255 : s);
}

void min_plus_broadcast(std::uint8_t* acc, const std::uint8_t* row, std::uint8_t offset, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) acc[i] = std::min(acc[i], add_sat(row[i], offset));
}

void min_of_sums(std::uint8_t* acc, const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) acc[i] = std::min(acc[i], add_sat(a[i], b[i]));
}

bool accumulate_u64(std::uint64_t* dst, const std::uint64_t* src, std::size_t len) {
  bool ok = true;
  for (std::size_t i = 0; i < len; ++i) ok &= !__builtin_add_overflow(dst[i], src[i], &dst[i]);
  return ok;
}

constexpr KernelSet kScalar{"scalar", &min_plus_broadcast, &min_of_sums, &accumulate_u64};

}  // namespace

const KernelSet& scalar_kernels() noexcept { return kScalar; }

}  // namespace swforge::simd
