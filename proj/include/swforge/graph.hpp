#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swforge {

inline constexpr std::size_t kMaxVertices = 62;

/// Bitset over vertex labels 0..n-1.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vertex_bit(std::size_t v) { return VertexSet{1} << v; }
inline constexpr VertexSet all_vertices(std::size_t n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int popcount(VertexSet s) { return std::popcount(s); }

struct Edge {
  std::uint32_t u;
  std::uint32_t v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Adjacency is symmetric and irreflexive.
class Graph {
 public:
  /// Duplicate pairs collapse to one edge; (u,v) and (v,u) are the same edge.
  /// Throws LoopEdge, IndexOutOfRange, TooLarge.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  /// Builds from raw adjacency rows, validating symmetry and irreflexivity.
  static Graph from_adjacency(std::size_t n, std::span<const VertexSet> rows);

  std::size_t order() const noexcept { return n_; }
  VertexSet neighbors(std::size_t v) const noexcept { return adj_[v]; }
  bool has_edge(std::size_t u, std::size_t v) const noexcept { return (adj_[u] >> v) & 1U; }
  int degree(std::size_t v) const noexcept { return popcount(adj_[v]); }
  std::size_t edge_count() const noexcept;

  /// Edges as (u,v) with u < v, sorted by (u, v).
  std::vector<Edge> edges() const;

  std::span<const VertexSet> rows() const noexcept { return {adj_.data(), n_}; }

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  Graph() = default;

  std::size_t n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

bool is_connected(const Graph& g);

/// True when the vertices of `subset` induce a connected subgraph (empty set
/// counts as connected).
bool induces_connected(const Graph& g, VertexSet subset);

Graph make_path(std::size_t n);
Graph make_complete(std::size_t n);
/// Star on n vertices with center n-1.
Graph make_star(std::size_t n);

// Short-form graph6 (n <= 62).
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

/// "n m" header followed by m lines "u v" with u < v.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

std::string to_dot(const Graph& g);

}  // namespace swforge
