#pragma once

#include <cstdint>
#include <optional>

#include "swforge/graph.hpp"
#include "swforge/nested_star.hpp"
#include "swforge/wide.hpp"

namespace swforge {

/// Steiner-Wiener index value for subset size k.
struct SwValue {
  unsigned k = 2;
  Wide value = 0;

  friend bool operator==(const SwValue&, const SwValue&) = default;
};

/// Sum of the Steiner distance over all k-subsets, computed generically by
/// dynamic programming. Returns 0 when k > n. Throws Disconnected, BadK.
SwValue steiner_wiener(const Graph& g, unsigned k);

/// Same sum, abandoned as soon as it exceeds `limit`.
std::optional<Wide> steiner_wiener_bounded(const Graph& g, unsigned k, Wide limit);

/// Fast path for graphs in which vertex n-1 is adjacent to every other
/// vertex: d(S) is k-1 when S induces a connected subgraph or contains n-1,
/// and k otherwise. nullopt when n-1 is not universal.
std::optional<SwValue> steiner_wiener_universal(const Graph& g, unsigned k);

/// Classical Wiener index from all-pairs distances.
Wide wiener_index(const Graph& g);

/// (n-1) * C(n-1, k-1), cross-checked against k*C(n,k) - C(n-1,k-1).
SwValue star_closed_form(std::uint64_t n, unsigned k);

/// Star value minus the hub deficits C(a_i, k-1).
SwValue nested_star_closed_form(const NestedStarSpec& spec, unsigned k);

/// Calls fn(subset) for every k-subset of {0..n-1} in increasing bit order.
template <class Fn>
void for_each_k_subset(std::size_t n, unsigned k, Fn&& fn) {
  if (k == 0 || k > n) return;
  VertexSet s = all_vertices(k);
  const VertexSet limit = vertex_bit(n);
  while (s < limit) {
    if (!fn(s)) return;
    const VertexSet low = s & (~s + 1);
    const VertexSet ripple = s + low;
    s = ripple | (((s ^ ripple) >> 2) / low);
    if (ripple == 0) return;
  }
}

}  // namespace swforge
