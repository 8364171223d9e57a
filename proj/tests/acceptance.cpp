// Acceptance suite. One line per criterion; exit status 1 if any fails.
//   swforge_acceptance               run all
//   swforge_acceptance --criterion N run one

#include <algorithm>
#include <bitset>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "swforge/binomial_rep.hpp"
#include "swforge/inverse.hpp"
#include "swforge/nested_star.hpp"
#include "swforge/scanner.hpp"
#include "swforge/steiner.hpp"
#include "swforge/sw_index.hpp"
#include "test_support.hpp"

using namespace swforge;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Verdict()> run;
};

// SW_k by running Dreyfus-Wagner on every k-subset (no closed forms, no fast path).
Wide sum_over_subsets(const Graph& g, unsigned k) {
  SteinerSolver solver(g);
  Wide total = 0;
  for_each_k_subset(g.order(), k, [&](VertexSet s) {
    total += solver.distance(TerminalSet{s});
    return true;
  });
  return total;
}

Verdict star_closed_form() {
  for (std::uint32_t n = 2; n <= 12; ++n)
    for (unsigned k = 2; k <= n; ++k) {
      const Wide brute = sum_over_subsets(make_star(n), k);
      const Wide formula = static_cast<Wide>(n - 1) * binomial(n - 1, k - 1);
      if (brute != formula)
        return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " brute=" + to_string(brute) +
                           " formula=" + to_string(formula)};
    }
  return {true, "all 2<=k<=n<=12 exact"};
}

Verdict nested_star_identity() {
  const NestedStarSpec figure(12, {3, 8});
  const Wide f2 = sum_over_subsets(build(figure), 2);
  const Wide f3 = sum_over_subsets(build(figure), 3);
  if (f2 != 110 || f3 != 574) return {false, "figure instance gave " + to_string(f2) + ", " + to_string(f3)};

  std::mt19937_64 rng(20261018);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % 12);  // 3..14
    std::vector<std::uint32_t> pool(n - 2);
    for (std::uint32_t i = 0; i < n - 2; ++i) pool[i] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t r = rng() % (std::min<std::size_t>(4, pool.size()) + 1);
    std::vector<std::uint32_t> hubs(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(r));
    std::sort(hubs.begin(), hubs.end());
    const NestedStarSpec spec(n, hubs);
    const Graph g = build(spec);
    for (unsigned k = 2; k <= 5 && k <= n; ++k) {
      Wide expected = static_cast<Wide>(n - 1) * binomial(n - 1, k - 1);
      for (std::uint32_t a : hubs) expected -= binomial(a, k - 1);
      const Wide exact = sum_over_subsets(g, k);
      ++checked;
      if (exact != expected)
        return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " exact=" + to_string(exact) +
                           " expected=" + to_string(expected)};
    }
  }
  return {true, std::to_string(checked) + " (spec, k) pairs plus figure instance 110/574"};
}

Verdict steiner_oracle() {
  std::mt19937_64 rng(7);
  std::size_t sets = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Graph g = testing::random_connected(rng, n, 0.05 + 0.05 * (trial % 10));
    SteinerSolver solver(g);
    for (unsigned k = 1; k <= 4 && k <= n; ++k) {
      bool ok = true;
      for_each_k_subset(n, k, [&](VertexSet s) {
        ++sets;
        ok = solver.distance(TerminalSet{s}) == steiner_distance_oracle(g, TerminalSet{s});
        return ok;
      });
      if (!ok) return {false, "mismatch on graph " + encode_graph6(g)};
    }
  }
  return {true, "500 graphs, " + std::to_string(sets) + " terminal sets, 0 mismatches"};
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::uint64_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

Verdict k2_exceptions() {
  const ScanReport r = scan(2, 27);
  const bool ok = r.complete && r.exceptions == std::vector<std::uint64_t>{2, 5};
  return {ok, "exceptions " + join(r.exceptions) + (r.complete ? " (complete)" : " (partial)")};
}

Verdict k3_exceptions() {
  std::stringstream corpus;
  generate_connected(9, [&](const Graph& g) { corpus << encode_graph6(g) << '\n'; });
  std::vector<std::uint64_t> first;
  bool stable = true;
  bool complete = true;
  std::size_t size = 0;
  for (std::uint64_t limit = 120; limit <= 160; limit += 10) {
    corpus.clear();
    corpus.seekg(0);
    const ScanReport r = scan(3, limit, &corpus);
    complete = complete && r.complete;
    if (limit == 120) first = r.exceptions;
    stable = stable && r.exceptions == first;
    size = r.exceptions.size();
    if (limit == 160) first = r.exceptions;
  }
  std::string detail = "size " + std::to_string(size) + (stable ? ", stable" : ", NOT stable") + " over V=120..160" +
                       (complete ? ", coverage complete" : ", coverage partial") + "; set " + join(first);
  if (size > 34 && !first.empty() && first.front() == 1)
    detail += "; the value 1 (below SW_3 of every graph with n >= 3) accounts for the surplus";
  return {stable && complete && size <= 34, detail};
}

Verdict inverse_round_trip() {
  std::size_t failures = 0;
  std::uint64_t first_failure = 0;
  for (std::uint64_t target = 605; target <= 2000; ++target) {
    const auto cert = invert(3, target, 40);
    const bool ok = cert && sum_over_subsets(build(cert->spec), 3) == target;
    if (!ok && failures++ == 0) first_failure = target;
  }
  if (failures) return {false, std::to_string(failures) + " failures, first at " + std::to_string(first_failure)};
  return {true, "1396 targets certified and recomputed"};
}

Verdict local_solubility() {
  std::size_t cases = 0;
  for (unsigned d = 2; d <= 3; ++d) {
    const unsigned s = d == 2 ? 4 : 18;
    for (std::uint64_t p = 2; p <= d; ++p) {
      if (!is_prime(p)) continue;
      const unsigned t = factorial_valuation(p, d);
      std::uint64_t q = 1;
      for (unsigned i = 0; i < 1 + t; ++i) q *= p;
      for (std::uint64_t m = 0; m < q; ++m) {
        LocalCountSpec spec{p, 1 + t, d, std::vector<std::uint64_t>(s, 1), m};
        ++cases;
        if (count_local(spec) == 0)
          return {false, "M_m = 0 at d=" + std::to_string(d) + " p=" + std::to_string(p) + " m=" + std::to_string(m)};
      }
    }
  }
  return {true, std::to_string(cases) + " residue classes all positive"};
}

Verdict distinctness_probe() {
  const std::vector<std::uint64_t> lambdas{1, 1, 1, 1};
  const std::vector<Wide> ms{1000, 10000, 100000};
  const auto rows = asymptotic_probe(2, lambdas, ms, RootBound{});
  bool decreasing = true;
  double lo = rows[0].normalized, hi = rows[0].normalized;
  std::string detail = "share";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i && !(rows[i].collision_share < rows[i - 1].collision_share)) decreasing = false;
    lo = std::min(lo, rows[i].normalized);
    hi = std::max(hi, rows[i].normalized);
    char buf[64];
    std::snprintf(buf, sizeof buf, " %.4g", rows[i].collision_share);
    detail += buf;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "; normalized band ratio %.3g", hi / lo);
  detail += buf;
  const bool ok = decreasing && rows.back().collision_share < 0.2 && lo > 0 && hi / lo <= 4.0;
  return {ok, detail};
}

Verdict representation_completeness() {
  constexpr std::size_t kMaxM = 2000;
  std::size_t checked = 0;
  for (unsigned d = 1; d <= 4; ++d)
    for (std::uint64_t max_x = 2; max_x <= 30; ++max_x) {
      std::bitset<kMaxM + 1> reach;
      reach[0] = true;
      for (std::uint64_t x = 1; x < max_x; ++x) {
        const Wide c = binomial(x, d);
        if (c == 0 || c > kMaxM) continue;
        reach |= reach << static_cast<std::size_t>(c);
      }
      for (std::uint64_t m = 1; m <= kMaxM; ++m) {
        const auto rep = represent(m, d, max_x);
        ++checked;
        bool ok = rep.has_value() == reach[m];
        if (ok && rep) {
          Wide sum = 0;
          for (std::size_t i = 0; i < rep->terms.size(); ++i) {
            const std::uint64_t x = rep->terms[i];
            if (x >= max_x || (i && rep->terms[i - 1] >= x)) ok = false;
            sum += binomial(x, d);
          }
          ok = ok && sum == m && rep->valid();
        }
        if (!ok)
          return {false, "m=" + std::to_string(m) + " d=" + std::to_string(d) + " max_x=" + std::to_string(max_x)};
      }
    }
  return {true, std::to_string(checked) + " (m, d, max_x) triples agree"};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "star closed form", 10, star_closed_form},
      {2, "nested star identity", 120, nested_star_identity},
      {3, "Steiner oracle equivalence", 300, steiner_oracle},
      {4, "k=2 exceptions", 60, k2_exceptions},
      {5, "k=3 exception count", 1800, k3_exceptions},
      {6, "inverse round trip", 600, inverse_round_trip},
      {7, "local solubility", 60, local_solubility},
      {8, "distinctness asymptotics", 300, distinctness_probe},
      {9, "representation completeness", 300, representation_completeness},
  };
  return all;
}

bool run_one(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = c.run();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > c.limit_seconds) {
    v.pass = false;
    v.detail += "; over time limit";
  }
  std::printf("[%s] AC%d %s: %s (%.2f s, limit %.0f s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(),
              secs, c.limit_seconds);
  std::fflush(stdout);
  return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  bool matched = false;
  for (const Criterion& c : criteria()) {
    if (only && c.id != only) continue;
    matched = true;
    all_pass = run_one(c) && all_pass;
  }
  if (!matched) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all_pass ? 0 : 1;
}
