#include "swforge/sw_index.hpp"

#include "swforge/error.hpp"
#include "swforge/steiner.hpp"

namespace swforge {
namespace {

void check_k(unsigned k) {
  if (k < 2) throw Error(ErrorKind::BadK, "k must be >= 2, got " + std::to_string(k));
}

TerminalSet as_terminals(VertexSet s) { return TerminalSet{s}; }

}  // namespace

std::optional<Wide> steiner_wiener_bounded(const Graph& g, unsigned k, Wide limit) {
  check_k(k);
  SteinerSolver solver(g);
  Wide total = 0;
  bool within = true;
  for_each_k_subset(g.order(), k, [&](VertexSet s) {
    total = checked_add(total, solver.distance(as_terminals(s)));
    within = total <= limit;
    return within;
  });
  if (!within) return std::nullopt;
  return total;
}

SwValue steiner_wiener(const Graph& g, unsigned k) {
  return {k, *steiner_wiener_bounded(g, k, kWideMax)};
}

std::optional<SwValue> steiner_wiener_universal(const Graph& g, unsigned k) {
  check_k(k);
  const std::size_t n = g.order();
  const std::size_t center = n - 1;
  if (g.neighbors(center) != all_vertices(center)) return std::nullopt;
  Wide total = 0;
  const VertexSet center_bit = vertex_bit(center);
  for_each_k_subset(n, k, [&](VertexSet s) {
    const bool spans = (s & center_bit) || induces_connected(g, s);
    total += spans ? k - 1 : k;
    return true;
  });
  return SwValue{k, total};
}

Wide wiener_index(const Graph& g) {
  const DistanceMatrix d = all_pairs_distances(g);
  Wide total = 0;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v) total += d.at(u, v);
  return total;
}

SwValue star_closed_form(std::uint64_t n, unsigned k) {
  check_k(k);
  if (n < 2) throw Error(ErrorKind::BadSpec, "star needs n >= 2");
  const Wide value = checked_mul(Wide{n - 1}, binomial(n - 1, k - 1));
  // Every k-subset costs k edges through the center, except that subsets
  // containing the center save one.
  const Wide alternate = checked_sub(checked_mul(Wide{k}, binomial(n, k)), binomial(n - 1, k - 1));
  if (alternate != value) throw Error(ErrorKind::Overflow, "star closed forms disagree");
  return {k, value};
}

SwValue nested_star_closed_form(const NestedStarSpec& spec, unsigned k) {
  SwValue v = star_closed_form(spec.n(), k);
  for (std::uint32_t a : spec.hubs()) v.value = checked_sub(v.value, hub_deficit_count(a, k));
  return v;
}

}  // namespace swforge
