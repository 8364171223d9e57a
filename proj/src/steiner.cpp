#include "swforge/steiner.hpp"

#include <algorithm>
#include <bit>

#include "swforge/error.hpp"

namespace swforge {

TerminalSet TerminalSet::of(std::initializer_list<std::uint32_t> vertices) {
  return of(std::span<const std::uint32_t>(vertices.begin(), vertices.size()));
}

TerminalSet TerminalSet::of(std::span<const std::uint32_t> vertices) {
  TerminalSet s;
  for (std::uint32_t v : vertices) {
    if (v >= kMaxVertices) throw Error(ErrorKind::IndexOutOfRange, "terminal " + std::to_string(v) + " out of range");
    s.members |= vertex_bit(v);
  }
  return s;
}

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), rows_(n) {
  for (auto& r : rows_) r.hops.fill(simd::kInf);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix dist(n);
  const VertexSet everyone = all_vertices(n);
  for (std::size_t src = 0; src < n; ++src) {
    auto& row = dist.row(src).hops;
    VertexSet seen = vertex_bit(src);
    VertexSet frontier = seen;
    std::uint8_t depth = 0;
    row[src] = 0;
    while (frontier) {
      ++depth;
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(static_cast<std::size_t>(std::countr_zero(f)));
      next &= ~seen;
      for (VertexSet x = next; x; x &= x - 1) row[static_cast<std::size_t>(std::countr_zero(x))] = depth;
      seen |= next;
      frontier = next;
    }
    if (seen != everyone) throw Error(ErrorKind::Disconnected, "graph is not connected");
  }
  return dist;
}

SteinerSolver::SteinerSolver(const Graph& g, const simd::KernelSet& kernels)
    : n_(g.order()),
      lanes_(std::min<std::size_t>(64, (g.order() + 31) / 32 * 32)),
      dist_(all_pairs_distances(g)),
      kernels_(&kernels) {}

std::uint32_t SteinerSolver::distance(TerminalSet s) {
  if (s.members == 0) throw Error(ErrorKind::EmptyTerminals, "terminal set is empty");
  if (s.members & ~all_vertices(n_)) throw Error(ErrorKind::IndexOutOfRange, "terminal outside the graph");
  const int k = s.size();
  if (k > kMaxTerminals) throw Error(ErrorKind::TooLarge, "at most 16 terminals supported");

  std::array<std::size_t, kMaxTerminals> term{};
  {
    int i = 0;
    for (VertexSet x = s.members; x; x &= x - 1) term[static_cast<std::size_t>(i++)] = static_cast<std::size_t>(std::countr_zero(x));
  }
  if (k == 1) return 0;
  if (k == 2) return dist_.at(term[0], term[1]);

  // Dreyfus-Wagner over the metric closure. table_[D] holds, for each vertex
  // v, the size of a minimum Steiner tree for D + {v}; the last terminal acts
  // as the root and is never part of a subset.
  const std::size_t inner = static_cast<std::size_t>(k - 1);
  const std::size_t full = (std::size_t{1} << inner) - 1;
  const std::size_t root = term[inner];
  table_.resize(full + 1);
  for (std::size_t i = 0; i < inner; ++i) table_[std::size_t{1} << i] = dist_.row(term[i]);

  for (std::size_t d = 3; d <= full; ++d) {
    if (std::has_single_bit(d)) continue;
    auto& merged = merged_.hops;
    merged.fill(simd::kInf);
    const std::size_t low = d & (~d + 1);
    for (std::size_t e = (d - 1) & d; e; e = (e - 1) & d) {
      if (!(e & low)) continue;
      kernels_->min_of_sums(merged.data(), table_[e].hops.data(), table_[d ^ e].hops.data(), lanes_);
    }
    if (d == full) {
      unsigned best = simd::kInf;
      const auto& to_root = dist_.row(root).hops;
      for (std::size_t u = 0; u < n_; ++u) best = std::min(best, unsigned{merged[u]} + unsigned{to_root[u]});
      return best;
    }
    auto& out = table_[d].hops;
    out.fill(simd::kInf);
    for (std::size_t u = 0; u < n_; ++u)
      if (merged[u] != simd::kInf) kernels_->min_plus_broadcast(out.data(), dist_.row(u).hops.data(), merged[u], lanes_);
  }
  return simd::kInf;  // unreachable: d == full always returns
}

std::uint32_t steiner_distance(const Graph& g, TerminalSet s) {
  if (s.members == 0) throw Error(ErrorKind::EmptyTerminals, "terminal set is empty");
  SteinerSolver solver(g);
  return solver.distance(s);
}

std::uint32_t steiner_distance_oracle(const Graph& g, TerminalSet s) {
  const std::size_t n = g.order();
  if (n > 20) throw Error(ErrorKind::TooLarge, "oracle limited to n <= 20");
  if (s.members == 0) throw Error(ErrorKind::EmptyTerminals, "terminal set is empty");
  if (s.members & ~all_vertices(n)) throw Error(ErrorKind::IndexOutOfRange, "terminal outside the graph");
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  const VertexSet rest = all_vertices(n) & ~s.members;
  int best = static_cast<int>(n) - 1;
  // Walk every subset of the non-terminals.
  VertexSet extra = 0;
  do {
    const VertexSet u = s.members | extra;
    const int size = popcount(u) - 1;
    if (size < best && induces_connected(g, u)) best = size;
    extra = (extra - rest) & rest;
  } while (extra != 0);
  return static_cast<std::uint32_t>(best);
}

}  // namespace swforge
