#include <doctest.h>

#include <random>

#include "swforge/error.hpp"
#include "swforge/scanner.hpp"
#include "swforge/steiner.hpp"
#include "swforge/sw_index.hpp"
#include "test_support.hpp"

using namespace swforge;

namespace {

// Sum of the superset oracle over all k-subsets; shares nothing with the
// dynamic program.
Wide oracle_sw(const Graph& g, unsigned k) {
  Wide total = 0;
  for_each_k_subset(g.order(), k, [&](VertexSet s) {
    total += steiner_distance_oracle(g, TerminalSet{s});
    return true;
  });
  return total;
}

}  // namespace

TEST_SUITE("sw_index") {

TEST_CASE("k-subset enumeration visits C(n,k) distinct subsets") {
  for (std::size_t n = 1; n <= 12; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      std::vector<VertexSet> seen;
      for_each_k_subset(n, k, [&](VertexSet s) {
        CHECK(popcount(s) == static_cast<int>(k));
        CHECK((s & ~all_vertices(n)) == 0);
        seen.push_back(s);
        return true;
      });
      CHECK(std::is_sorted(seen.begin(), seen.end()));
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
      CHECK(Wide{seen.size()} == binomial(n, k));
    }
}

TEST_CASE("small index values") {
  CHECK(steiner_wiener(make_path(3), 2).value == 4);
  for (std::size_t n = 2; n <= 9; ++n) CHECK(steiner_wiener(make_complete(n), 2).value == binomial(n, 2));
  CHECK(oracle_sw(make_star(12), 2) == 121);
  CHECK(oracle_sw(make_star(12), 3) == 605);
  CHECK(steiner_wiener(make_star(12), 2).value == 121);
  CHECK(steiner_wiener(make_star(12), 3).value == 605);
  CHECK(steiner_wiener(make_path(3), 5).value == 0);
  CHECK_THROWS_AS(steiner_wiener(make_path(3), 1), Error);
  CHECK_THROWS_AS(steiner_wiener(Graph::from_edge_list(2, {}), 2), Error);
}

TEST_CASE("star closed form") {
  CHECK(star_closed_form(12, 2).value == 121);
  CHECK(star_closed_form(12, 3).value == 605);
  CHECK(star_closed_form(2, 2).value == 1);
  CHECK(star_closed_form(3, 5).value == 0);
  CHECK_THROWS_AS(star_closed_form(5, 1), Error);
  for (std::size_t n = 2; n <= 10; ++n)
    for (unsigned k = 2; k <= n; ++k) CHECK(star_closed_form(n, k).value == oracle_sw(make_star(n), k));
}

TEST_CASE("nested star closed form on the figure instance") {
  const NestedStarSpec fig(12, {3, 8});
  const Graph g = build(fig);
  CHECK(oracle_sw(g, 2) == 110);
  CHECK(oracle_sw(g, 3) == 574);
  CHECK(nested_star_closed_form(fig, 2).value == 110);
  CHECK(nested_star_closed_form(fig, 3).value == 574);
  CHECK(nested_star_closed_form(NestedStarSpec(9, {}), 4) == star_closed_form(9, 4));
}

TEST_CASE("SW_2 is the Wiener index") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_connected(rng, 2 + rng() % 20, 0.15);
    CHECK(steiner_wiener(g, 2).value == wiener_index(g));
  }
}

TEST_CASE("universal-vertex fast path agrees with the generic path") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    Graph base = testing::random_graph(rng, n - 1, 0.3);
    std::vector<Edge> edges = base.edges();
    for (std::uint32_t v = 0; v + 1 < n; ++v) edges.push_back({v, static_cast<std::uint32_t>(n - 1)});
    const Graph g = Graph::from_edge_list(n, edges);
    for (unsigned k = 2; k <= 5; ++k) CHECK(steiner_wiener_universal(g, k) == steiner_wiener(g, k));
  }
  CHECK_FALSE(steiner_wiener_universal(make_path(4), 2).has_value());
}

TEST_CASE("bounded evaluation stops past the limit") {
  CHECK(steiner_wiener_bounded(make_star(12), 3, 605) == Wide{605});
  CHECK_FALSE(steiner_wiener_bounded(make_star(12), 3, 604).has_value());
}

TEST_CASE("every connected graph on up to 7 vertices respects (k-1) C(n,k)") {
  for (std::size_t n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_connected(n))
      for (unsigned k = 2; k <= n; ++k) CHECK(steiner_wiener(g, k).value >= min_sw_lower_bound(n, k));
}

}  // TEST_SUITE
