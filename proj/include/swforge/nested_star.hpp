#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "swforge/graph.hpp"
#include "swforge/wide.hpp"

namespace swforge {

/// Star size n and strictly increasing hubs 1 <= a_1 < ... < a_r <= n - 2.
class NestedStarSpec {
 public:
  /// Throws BadSpec when the hub list is not strictly increasing within
  /// 1..n-2, or n is outside 2..62.
  NestedStarSpec(std::uint32_t n, std::vector<std::uint32_t> hubs);

  std::uint32_t n() const noexcept { return n_; }
  const std::vector<std::uint32_t>& hubs() const noexcept { return hubs_; }

  friend bool operator==(const NestedStarSpec&, const NestedStarSpec&) = default;

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> hubs_;
};

/// Parses "3,8" (empty string means no hubs). Throws BadSpec.
std::vector<std::uint32_t> parse_hub_list(std::string_view text);

/// Vertices 0..n-1; for i < j the edge (i, j) is present iff j is a hub or
/// j == n - 1.
Graph build(const NestedStarSpec& spec);

/// C(a, k-1): the number of k-subsets avoiding the center whose largest
/// element is hub a. Each of them spans a connected subgraph on its own.
Wide hub_deficit_count(std::uint64_t a, unsigned k);

}  // namespace swforge
