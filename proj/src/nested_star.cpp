#include "swforge/nested_star.hpp"

#include <charconv>

#include "swforge/error.hpp"

namespace swforge {

NestedStarSpec::NestedStarSpec(std::uint32_t n, std::vector<std::uint32_t> hubs) : n_(n), hubs_(std::move(hubs)) {
  if (n_ < 2 || n_ > kMaxVertices) throw Error(ErrorKind::BadSpec, "nested star needs 2 <= n <= 62");
  std::uint32_t previous = 0;
  for (std::uint32_t a : hubs_) {
    if (a <= previous) throw Error(ErrorKind::BadSpec, "hubs must be positive and strictly increasing");
    if (a > n_ - 2) throw Error(ErrorKind::BadSpec, "hub " + std::to_string(a) + " must be < n - 1");
    previous = a;
  }
}

std::vector<std::uint32_t> parse_hub_list(std::string_view text) {
  std::vector<std::uint32_t> hubs;
  if (text.empty()) return hubs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::uint32_t value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
      throw Error(ErrorKind::BadSpec, "malformed hub list \"" + std::string(text) + "\"");
    hubs.push_back(value);
    pos = comma + 1;
  }
  return hubs;
}

Graph build(const NestedStarSpec& spec) {
  const std::uint32_t n = spec.n();
  std::vector<Edge> edges;
  for (std::uint32_t a : spec.hubs())
    for (std::uint32_t i = 0; i < a; ++i) edges.push_back({i, a});
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.push_back({i, n - 1});
  return Graph::from_edge_list(n, edges);
}

Wide hub_deficit_count(std::uint64_t a, unsigned k) {
  if (k < 2) throw Error(ErrorKind::BadK, "k must be >= 2");
  return binomial(a, k - 1);
}

}  // namespace swforge
