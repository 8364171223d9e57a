#pragma once

#include <cstdint>
#include <optional>

#include "swforge/graph.hpp"
#include "swforge/nested_star.hpp"
#include "swforge/sw_index.hpp"
#include "swforge/wide.hpp"

namespace swforge {

/// Targets (n-1)C(n-1,k-1) - n^(k-1) .. (n-1)C(n-1,k-1) - m0 reachable from
/// an n-vertex nested star whose deficit lies in [m0, n^(k-1)].
struct Interval {
  SignedWide lo = 0;
  SignedWide hi = 0;

  /// True when no positive integer lies in [lo, hi].
  bool empty() const noexcept { return hi < 1 || lo > hi; }
};

Interval feasible_interval(std::uint64_t n, unsigned k, Wide m0);

/// A nested star whose index was recomputed exactly and equals the target.
struct InverseCertificate {
  unsigned k = 2;
  Wide target = 0;
  NestedStarSpec spec{2, {}};
  Wide predicted = 0;
  Wide verified = 0;
};

/// Searches n upward from the smallest star whose index reaches the target,
/// asking for a distinct-term representation of the deficit with terms
/// below n - 1. nullopt ("unresolved") does not prove the target is
/// unattainable; other graph shapes may still reach it. n_max is clamped to
/// 62. Throws BadK.
std::optional<InverseCertificate> invert(unsigned k, Wide target, std::uint32_t n_max);

/// Exact recomputation of SW_k. Throws Disconnected.
bool verify(const Graph& g, unsigned k, Wide claimed);

}  // namespace swforge
