#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "swforge/graph.hpp"
#include "swforge/simd.hpp"

namespace swforge {

/// Non-empty set of terminal vertices.
struct TerminalSet {
  VertexSet members = 0;

  static TerminalSet of(std::initializer_list<std::uint32_t> vertices);
  static TerminalSet of(std::span<const std::uint32_t> vertices);
  int size() const noexcept { return popcount(members); }
};

/// One padded row of hop counts; lanes past n hold simd::kInf.
struct alignas(64) DistanceRow {
  std::array<std::uint8_t, 64> hops;
};

class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::uint32_t at(std::size_t u, std::size_t v) const noexcept { return rows_[u].hops[v]; }
  const DistanceRow& row(std::size_t u) const noexcept { return rows_[u]; }
  DistanceRow& row(std::size_t u) noexcept { return rows_[u]; }

 private:
  std::size_t n_;
  std::vector<DistanceRow> rows_;
};

/// BFS from every vertex. Throws Disconnected.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Reusable Steiner-distance evaluator for one graph. Holds the distance
/// matrix and the dynamic-program workspace, so repeated queries on the same
/// graph allocate nothing. Not thread-safe; use one solver per thread.
class SteinerSolver {
 public:
  /// Terminal sets larger than this are rejected with TooLarge.
  static constexpr int kMaxTerminals = 16;

  explicit SteinerSolver(const Graph& g, const simd::KernelSet& kernels = simd::active_kernels());

  /// Minimum edge count of a connected subgraph spanning `s`.
  std::uint32_t distance(TerminalSet s);

  const DistanceMatrix& distances() const noexcept { return dist_; }
  std::size_t order() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::size_t lanes_;
  DistanceMatrix dist_;
  std::vector<DistanceRow> table_;
  DistanceRow merged_;
  const simd::KernelSet* kernels_;
};

/// Throws Disconnected, EmptyTerminals, IndexOutOfRange, TooLarge.
std::uint32_t steiner_distance(const Graph& g, TerminalSet s);

/// Independent reference: min over vertex supersets U of S inducing a
/// connected subgraph of |U| - 1. Exponential in n; n <= 20.
std::uint32_t steiner_distance_oracle(const Graph& g, TerminalSet s);

}  // namespace swforge
