#pragma once

// Data-parallel inner loops shared by the Steiner dynamic program and the
// representation counters. Every kernel set computes bit-identical results;
// the scalar set is the reference the others are tested against.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace swforge::simd {

/// Saturating 8-bit "infinity" used for unreachable distances.
inline constexpr std::uint8_t kInf = 255;

struct KernelSet {
  std::string_view name;

  /// acc[i] = min(acc[i], sat8(row[i] + offset)) for i < len.
  void (*min_plus_broadcast)(std::uint8_t* acc, const std::uint8_t* row, std::uint8_t offset, std::size_t len);

  /// acc[i] = min(acc[i], sat8(a[i] + b[i])) for i < len.
  void (*min_of_sums)(std::uint8_t* acc, const std::uint8_t* a, const std::uint8_t* b, std::size_t len);

  /// dst[i] += src[i] for i < len (mod 2^64). Returns false if any lane wrapped.
  bool (*accumulate_u64)(std::uint64_t* dst, const std::uint64_t* src, std::size_t len);
};

const KernelSet& scalar_kernels() noexcept;

/// Kernel sets usable on this CPU, scalar first, best last.
std::span<const KernelSet* const> available_kernels() noexcept;

/// Best available set, or the one named by SW_FORGE_SIMD (scalar, sse2, avx2,
/// neon) when that is available. Resolved once per process.
const KernelSet& active_kernels() noexcept;

namespace detail {
const KernelSet* sse2_kernels() noexcept;
const KernelSet* avx2_kernels() noexcept;
const KernelSet* neon_kernels() noexcept;
bool cpu_has_avx2() noexcept;
}  // namespace detail

}  // namespace swforge::simd
