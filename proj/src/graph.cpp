#include "swforge/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "swforge/error.hpp"

namespace swforge {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n < 1 || n > kMaxVertices)
    throw Error(ErrorKind::TooLarge, "vertex count must be in 1.." + std::to_string(kMaxVertices));
  Graph g;
  g.n_ = n;
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw Error(ErrorKind::IndexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside 0.." + std::to_string(n - 1));
    if (e.u == e.v) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(e.u));
    g.adj_[e.u] |= vertex_bit(e.v);
    g.adj_[e.v] |= vertex_bit(e.u);
  }
  return g;
}

Graph Graph::from_adjacency(std::size_t n, std::span<const VertexSet> rows) {
  if (n < 1 || n > kMaxVertices || rows.size() != n)
    throw Error(ErrorKind::TooLarge, "adjacency must have 1.." + std::to_string(kMaxVertices) + " rows");
  Graph g;
  g.n_ = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (rows[v] & ~all_vertices(n)) throw Error(ErrorKind::IndexOutOfRange, "neighbor index >= n");
    if (rows[v] & vertex_bit(v)) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(v));
    g.adj_[v] = rows[v];
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (g.has_edge(u, v) != g.has_edge(v, u)) throw Error(ErrorKind::BadSpec, "adjacency is not symmetric");
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < n_; ++v) twice += static_cast<std::size_t>(popcount(adj_[v]));
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::uint32_t u = 0; u < n_; ++u) {
    VertexSet higher = adj_[u] & ~all_vertices(u + 1);
    while (higher) {
      out.push_back({u, static_cast<std::uint32_t>(std::countr_zero(higher))});
      higher &= higher - 1;
    }
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + static_cast<std::ptrdiff_t>(a.n_), b.adj_.begin());
}

bool induces_connected(const Graph& g, VertexSet subset) {
  if (subset == 0) return true;
  VertexSet reached = subset & (~subset + 1);
  VertexSet frontier = reached;
  while (frontier) {
    VertexSet next = 0;
    while (frontier) {
      next |= g.neighbors(static_cast<std::size_t>(std::countr_zero(frontier)));
      frontier &= frontier - 1;
    }
    next &= subset & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == subset;
}

bool is_connected(const Graph& g) { return induces_connected(g, all_vertices(g.order())); }

Graph make_path(std::size_t n) {
  std::vector<Edge> e;
  for (std::uint32_t v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph::from_edge_list(n, e);
}

Graph make_complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edge_list(n, e);
}

Graph make_star(std::size_t n) {
  std::vector<Edge> e;
  const auto center = static_cast<std::uint32_t>(n - 1);
  for (std::uint32_t v = 0; v < center; ++v) e.push_back({v, center});
  return Graph::from_edge_list(n, e);
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Error(ErrorKind::MalformedGraph6, "empty graph6 string");
  for (char c : line) {
    const auto uc = static_cast<unsigned char>(c);
    if (uc < 63 || uc > 126) throw Error(ErrorKind::MalformedGraph6, "character outside 63..126");
  }
  const std::size_t n = static_cast<unsigned char>(line[0]) - 63;
  if (n == 63) throw Error(ErrorKind::MalformedGraph6, "long-form size header is not supported (n > 62)");
  if (n == 0) throw Error(ErrorKind::MalformedGraph6, "graph6 with zero vertices");
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (line.size() != 1 + chars)
    throw Error(ErrorKind::MalformedGraph6,
                "expected " + std::to_string(1 + chars) + " characters, got " + std::to_string(line.size()));
  std::array<VertexSet, kMaxVertices> rows{};
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const unsigned value = static_cast<unsigned char>(line[1 + bit / 6]) - 63U;
      if ((value >> (5 - bit % 6)) & 1U) {
        rows[i] |= vertex_bit(j);
        rows[j] |= vertex_bit(i);
      }
    }
  }
  return Graph::from_adjacency(n, std::span<const VertexSet>(rows.data(), n));
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxVertices) throw Error(ErrorKind::TooLarge, "graph6 short form needs n <= 62");
  const std::size_t bits = n * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
    }
  }
  return out;
}

std::string to_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::ostringstream out;
  out << g.order() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

namespace {

class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : text_(text) {}

  bool next(std::uint64_t& value) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == text_.size()) return false;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || (ptr != end && !std::isspace(static_cast<unsigned char>(*ptr))))
      throw Error(ErrorKind::MalformedEdgeList, "expected a non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return true;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  TokenReader reader(text);
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  if (!reader.next(n) || !reader.next(m)) throw Error(ErrorKind::MalformedEdgeList, "missing \"n m\" header");
  if (n < 1 || n > kMaxVertices) throw Error(ErrorKind::TooLarge, "vertex count must be in 1..62");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!reader.next(u) || !reader.next(v))
      throw Error(ErrorKind::MalformedEdgeList, "expected " + std::to_string(m) + " edges");
    if (u >= n || v >= n) throw Error(ErrorKind::IndexOutOfRange, "edge endpoint >= n");
    edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
  }
  std::uint64_t extra = 0;
  if (reader.next(extra)) throw Error(ErrorKind::MalformedEdgeList, "trailing data after edge list");
  return Graph::from_edge_list(n, edges);
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (std::size_t v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace swforge
