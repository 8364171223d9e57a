#include "swforge/wide.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace swforge {

Wide checked_add(Wide a, Wide b, ErrorKind on_overflow) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(on_overflow, "128-bit addition overflow");
  return r;
}

Wide checked_sub(Wide a, Wide b, ErrorKind on_overflow) {
  if (b > a) throw Error(on_overflow, "unsigned subtraction underflow");
  return a - b;
}

Wide checked_mul(Wide a, Wide b, ErrorKind on_overflow) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(on_overflow, "128-bit multiplication overflow");
  return r;
}

Wide checked_pow(Wide base, unsigned exp, ErrorKind on_overflow) {
  Wide r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base, on_overflow);
  return r;
}

namespace {

Wide gcd_wide(Wide a, Wide b) {
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Wide binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // r * (n - i) is divisible by (i + 1); split the divisor between the two
    // factors so the intermediate never exceeds the final magnitude.
    const Wide divisor = i + 1;
    const Wide g = gcd_wide(r, divisor);
    r /= g;
    const Wide rest = divisor / g;
    r = checked_mul(r, Wide{n - i} / rest);
  }
  return r;
}

Wide integer_root_floor(Wide m, unsigned d) {
  if (d == 0) throw std::invalid_argument("integer_root_floor: d must be positive");
  if (d == 1 || m < 2) return m;
  auto pow_le = [&](Wide r) {
    Wide acc = 1;
    for (unsigned i = 0; i < d; ++i) {
      if (__builtin_mul_overflow(acc, r, &acc)) return false;
      if (acc > m) return false;
    }
    return true;
  };
  Wide lo = 1;
  Wide hi = 2;
  while (pow_le(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    Wide mid = lo + (hi - lo) / 2;
    if (pow_le(mid)) lo = mid; else hi = mid;
  }
  return lo;
}

std::string to_string(Wide value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(SignedWide value) {
  if (value < 0) return "-" + to_string(static_cast<Wide>(-(value + 1)) + 1);
  return to_string(static_cast<Wide>(value));
}

Wide parse_wide(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  Wide r = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a non-negative integer: " + std::string(text));
    if (__builtin_mul_overflow(r, Wide{10}, &r) || __builtin_add_overflow(r, Wide(c - '0'), &r))
      throw std::invalid_argument("integer exceeds 128 bits: " + std::string(text));
  }
  return r;
}

}  // namespace swforge
