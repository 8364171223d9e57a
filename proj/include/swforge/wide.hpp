#pragma once

// Overflow-checked 128-bit arithmetic used for index values and counts.

#include <cstdint>
#include <string>
#include <string_view>

#include "swforge/error.hpp"

namespace swforge {

using Wide = unsigned __int128;
using SignedWide = __int128;

inline constexpr Wide kWideMax = ~Wide{0};

Wide checked_add(Wide a, Wide b, ErrorKind on_overflow = ErrorKind::Overflow);
Wide checked_sub(Wide a, Wide b, ErrorKind on_overflow = ErrorKind::Overflow);
Wide checked_mul(Wide a, Wide b, ErrorKind on_overflow = ErrorKind::Overflow);
Wide checked_pow(Wide base, unsigned exp, ErrorKind on_overflow = ErrorKind::Overflow);

/// Exact C(n, k); zero when k > n. Throws Overflow only if the result does
/// not fit in 128 bits.
Wide binomial(std::uint64_t n, std::uint64_t k);

/// Largest r with r^d <= m.
Wide integer_root_floor(Wide m, unsigned d);

std::string to_string(Wide value);
std::string to_string(SignedWide value);

/// Parses a non-negative decimal integer. Throws std::invalid_argument.
Wide parse_wide(std::string_view text);

/// True when the value fits in uint64_t (used by JSON emitters).
inline bool fits_u64(Wide value) { return value <= Wide{UINT64_MAX}; }

}  // namespace swforge
