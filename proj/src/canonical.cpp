#include "swforge/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "swforge/error.hpp"

namespace swforge {
namespace {

constexpr std::size_t kCells = kMaxCanonicalOrder;

/// Ordered partition of the vertex set, one bitmask per cell.
struct Partition {
  std::array<VertexSet, kCells> cells{};
  std::size_t count = 0;

  bool discrete(std::size_t n) const { return count == n; }
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::uint64_t run() {
    Partition p;
    p.cells[0] = all_vertices(n_);
    p.count = 1;
    search(p);
    return best_;
  }

 private:
  // Equitable refinement: split every cell by neighbour counts into every
  // other cell until stable. Sub-cells are ordered by ascending count, which
  // depends only on the structure, never on the labels.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t w = 0; w < p.count && !changed; ++w) {
        const VertexSet splitter = p.cells[w];
        for (std::size_t x = 0; x < p.count && !changed; ++x) {
          const VertexSet cell = p.cells[x];
          if (std::has_single_bit(cell)) continue;
          std::array<VertexSet, kCells + 1> by_count{};
          int lo = 64;
          int hi = -1;
          for (VertexSet c = cell; c; c &= c - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(c));
            const int hits = popcount(g_.neighbors(v) & splitter);
            by_count[static_cast<std::size_t>(hits)] |= vertex_bit(v);
            lo = std::min(lo, hits);
            hi = std::max(hi, hits);
          }
          if (lo == hi) continue;
          std::array<VertexSet, kCells> pieces{};
          std::size_t m = 0;
          for (int h = lo; h <= hi; ++h)
            if (by_count[static_cast<std::size_t>(h)]) pieces[m++] = by_count[static_cast<std::size_t>(h)];
          std::copy_backward(p.cells.begin() + static_cast<std::ptrdiff_t>(x + 1),
                             p.cells.begin() + static_cast<std::ptrdiff_t>(p.count),
                             p.cells.begin() + static_cast<std::ptrdiff_t>(p.count + m - 1));
          std::copy(pieces.begin(), pieces.begin() + static_cast<std::ptrdiff_t>(m),
                    p.cells.begin() + static_cast<std::ptrdiff_t>(x));
          p.count += m - 1;
          changed = true;
        }
      }
    }
  }

  std::uint64_t leaf_code(const Partition& p) const {
    std::array<std::size_t, kCells> vertex_at{};
    for (std::size_t i = 0; i < n_; ++i) vertex_at[i] = static_cast<std::size_t>(std::countr_zero(p.cells[i]));
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g_.has_edge(vertex_at[i], vertex_at[j]) ? 1U : 0U);
    return code;
  }

  // Swapping u and v is an automorphism iff their neighbourhoods agree
  // outside {u, v}; such a swap fixes every individualized vertex, so the
  // subtrees below u and v yield the same codes.
  bool twins(std::size_t u, std::size_t v) const {
    const VertexSet mask = ~(vertex_bit(u) | vertex_bit(v));
    return (g_.neighbors(u) & mask) == (g_.neighbors(v) & mask);
  }

  void search(Partition p) {
    refine(p);
    if (p.discrete(n_)) {
      best_ = std::max(best_, leaf_code(p));
      return;
    }
    std::size_t target = 0;
    while (std::has_single_bit(p.cells[target])) ++target;
    const VertexSet cell = p.cells[target];
    VertexSet tried = 0;
    for (VertexSet c = cell; c; c &= c - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(c));
      bool redundant = false;
      for (VertexSet t = tried; t && !redundant; t &= t - 1)
        redundant = twins(static_cast<std::size_t>(std::countr_zero(t)), v);
      if (redundant) continue;
      tried |= vertex_bit(v);
      Partition child = p;
      std::copy_backward(child.cells.begin() + static_cast<std::ptrdiff_t>(target + 1),
                         child.cells.begin() + static_cast<std::ptrdiff_t>(child.count),
                         child.cells.begin() + static_cast<std::ptrdiff_t>(child.count + 1));
      child.cells[target] = vertex_bit(v);
      child.cells[target + 1] = cell & ~vertex_bit(v);
      ++child.count;
      search(child);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t best_ = 0;
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) throw Error(ErrorKind::TooLarge, "canonical form limited to n <= 11");
  if (g.order() == 1) return 0;
  return CanonicalSearch(g).run();
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  if (n > kMaxCanonicalOrder || n < 1) throw Error(ErrorKind::TooLarge, "canonical form limited to 1 <= n <= 11");
  std::array<VertexSet, kMaxVertices> rows{};
  int bit = static_cast<int>(n * (n - 1) / 2) - 1;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, --bit) {
      if ((code >> bit) & 1U) {
        rows[i] |= vertex_bit(j);
        rows[j] |= vertex_bit(i);
      }
    }
  }
  return Graph::from_adjacency(n, std::span<const VertexSet>(rows.data(), n));
}

}  // namespace swforge
