#include <doctest.h>

#include <random>

#include "swforge/error.hpp"
#include "swforge/nested_star.hpp"
#include "swforge/steiner.hpp"
#include "swforge/sw_index.hpp"
#include "test_support.hpp"

using namespace swforge;

TEST_SUITE("steiner") {

TEST_CASE("all-pairs distances") {
  const auto p4 = all_pairs_distances(make_path(4));
  CHECK(p4.at(0, 3) == 3);
  CHECK(p4.at(3, 0) == 3);
  CHECK(p4.at(2, 2) == 0);

  const auto s6 = all_pairs_distances(make_star(6));
  CHECK(s6.at(0, 1) == 2);
  CHECK(s6.at(0, 5) == 1);

  const auto k4 = all_pairs_distances(make_complete(4));
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) CHECK(k4.at(u, v) == (u == v ? 0U : 1U));

  CHECK_THROWS_AS(all_pairs_distances(Graph::from_edge_list(3, std::vector<Edge>{{0, 1}})), Error);
}

TEST_CASE("Steiner distance examples") {
  CHECK(steiner_distance(make_path(4), TerminalSet::of({0, 3})) == 3);
  CHECK(steiner_distance(make_star(6), TerminalSet::of({0, 1, 2})) == 3);
  CHECK(steiner_distance_oracle(make_star(6), TerminalSet::of({0, 1, 2})) == 3);
  const Graph fig = build(NestedStarSpec(12, {3, 8}));
  CHECK(steiner_distance(fig, TerminalSet::of({0, 1, 3})) == 2);
  CHECK(steiner_distance(fig, TerminalSet::of({0, 1, 2})) == 3);
  for (std::uint32_t v = 0; v < 5; ++v) CHECK(steiner_distance(make_complete(5), TerminalSet::of({v})) == 0);
}

TEST_CASE("oracle examples") {
  CHECK(steiner_distance_oracle(make_path(5), TerminalSet::of({0, 2, 4})) == 4);
  CHECK(steiner_distance_oracle(make_complete(5), TerminalSet::of({0, 1, 2})) == 2);
  CHECK(steiner_distance_oracle(make_path(5), TerminalSet::of({3})) == 0);
}

TEST_CASE("errors") {
  const Graph broken = Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {2, 3}});
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::BadSpec;
  };
  CHECK(kind([&] { steiner_distance(broken, TerminalSet::of({0, 1})); }) == ErrorKind::Disconnected);
  CHECK(kind([&] { steiner_distance_oracle(broken, TerminalSet::of({0, 1})); }) == ErrorKind::Disconnected);
  CHECK(kind([&] { steiner_distance(make_path(3), TerminalSet{}); }) == ErrorKind::EmptyTerminals);
  CHECK(kind([&] { steiner_distance(make_path(3), TerminalSet::of({5})); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind([&] { steiner_distance_oracle(make_path(21), TerminalSet::of({0, 1})); }) == ErrorKind::TooLarge);
  std::vector<std::uint32_t> many(17);
  for (std::uint32_t i = 0; i < 17; ++i) many[i] = i;
  CHECK(kind([&] { steiner_distance(make_path(20), TerminalSet::of(many)); }) == ErrorKind::TooLarge);
}

TEST_CASE("dynamic program matches the superset oracle on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 9);
    const Graph g = testing::random_connected(rng, n, trial % 2 ? 0.15 : 0.35);
    SteinerSolver solver(g);
    for (unsigned k = 1; k <= std::min<std::size_t>(4, n); ++k)
      for_each_k_subset(n, k, [&](VertexSet s) {
        CHECK(solver.distance(TerminalSet{s}) == steiner_distance_oracle(g, TerminalSet{s}));
        return true;
      });
  }
}

TEST_CASE("large terminal sets agree with the oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 12 + static_cast<std::size_t>(rng() % 5);
    const Graph g = testing::random_connected(rng, n, 0.12);
    SteinerSolver solver(g);
    for (int q = 0; q < 10; ++q) {
      TerminalSet s;
      const int k = 5 + static_cast<int>(rng() % 4);
      while (s.size() < k) s.members |= vertex_bit(rng() % n);
      CHECK(solver.distance(s) == steiner_distance_oracle(g, s));
    }
  }
}

TEST_CASE("monotone under terminal inclusion and bounded by |S|-1 and n-1") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 14);
    const Graph g = testing::random_connected(rng, n, 0.2);
    SteinerSolver solver(g);
    for (int q = 0; q < 20; ++q) {
      const VertexSet s = (rng() & all_vertices(n)) | vertex_bit(rng() % n);
      const VertexSet bigger = s | (rng() & all_vertices(n));
      if (popcount(bigger) > SteinerSolver::kMaxTerminals) continue;
      const auto ds = solver.distance(TerminalSet{s});
      CHECK(ds <= solver.distance(TerminalSet{bigger}));
      CHECK(ds >= static_cast<std::uint32_t>(popcount(s) - 1));
      CHECK(ds <= n - 1);
    }
  }
}

TEST_CASE("star graphs give d(S) in {k-1, k}") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % 10);
    std::vector<std::uint32_t> hubs;
    for (std::uint32_t a = 1; a + 1 < n; ++a)
      if (rng() % 3 == 0) hubs.push_back(a);
    const Graph g = build(NestedStarSpec(n, hubs));
    SteinerSolver solver(g);
    for (unsigned k = 2; k <= std::min(5U, n); ++k)
      for_each_k_subset(n, k, [&](VertexSet s) {
        const auto d = solver.distance(TerminalSet{s});
        CHECK((d == k - 1 || d == k));
        return true;
      });
  }
}

}  // TEST_SUITE
