#include "swforge/scanner.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <mutex>
#include <set>
#include <string>
#include <unordered_set>

#include "swforge/canonical.hpp"
#include "swforge/error.hpp"
#include "swforge/parallel.hpp"
#include "swforge/sw_index.hpp"

namespace swforge {
namespace {

// Canonical codes of the connected classes on n vertices, ascending.
std::vector<std::uint64_t> connected_codes(std::size_t n);

std::vector<std::uint64_t> extend_level(std::size_t n, const std::vector<std::uint64_t>& parents) {
  const unsigned workers = worker_count();
  std::vector<std::unordered_set<std::uint64_t>> found(workers);
  parallel_chunks(parents.size(), 64, [&](unsigned worker, std::size_t begin, std::size_t end) {
    auto& local = found[worker];
    std::array<VertexSet, kMaxVertices> rows{};
    for (std::size_t p = begin; p < end; ++p) {
      const Graph parent = graph_from_code(n - 1, parents[p]);
      const VertexSet span = all_vertices(n - 1);
      for (VertexSet attach = 1; attach <= span; ++attach) {
        for (std::size_t v = 0; v + 1 < n; ++v)
          rows[v] = parent.neighbors(v) | (((attach >> v) & 1U) ? vertex_bit(n - 1) : 0);
        rows[n - 1] = attach;
        local.insert(canonical_code(Graph::from_adjacency(n, std::span<const VertexSet>(rows.data(), n))));
      }
    }
  });
  std::unordered_set<std::uint64_t> merged;
  for (auto& f : found) merged.insert(f.begin(), f.end());
  std::vector<std::uint64_t> codes(merged.begin(), merged.end());
  std::sort(codes.begin(), codes.end());
  return codes;
}

std::mutex level_mutex;
std::map<std::size_t, std::vector<std::uint64_t>> level_cache;

std::vector<std::uint64_t> connected_codes(std::size_t n) {
  if (n < 1 || n > kGeneratorMaxOrder) throw Error(ErrorKind::TooLarge, "generator supports 1 <= n <= 10");
  {
    std::lock_guard lock(level_mutex);
    if (auto it = level_cache.find(n); it != level_cache.end()) return it->second;
  }
  std::vector<std::uint64_t> codes = n == 1 ? std::vector<std::uint64_t>{0} : extend_level(n, connected_codes(n - 1));
  std::lock_guard lock(level_mutex);
  // Large levels are regenerated on demand rather than pinned in memory.
  if (n <= kBuiltinMaxOrder + 1) level_cache.emplace(n, codes);
  return codes;
}

}  // namespace

const std::vector<Graph>& enumerate_connected(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::BadSpec, "n must be >= 1");
  if (n > kBuiltinMaxOrder) throw Error(ErrorKind::TooLarge, "built-in enumeration stops at n = 8; supply a graph6 corpus");
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Graph> graphs;
    for (std::uint64_t code : connected_codes(n)) graphs.push_back(graph_from_code(n, code));
    it = cache.emplace(n, std::move(graphs)).first;
  }
  return it->second;
}

void generate_connected(std::size_t n, const std::function<void(const Graph&)>& sink) {
  for (std::uint64_t code : connected_codes(n)) sink(graph_from_code(n, code));
}

std::uint64_t known_connected_count(std::size_t n) {
  // Connected graphs on n unlabeled nodes.
  static constexpr std::array<std::uint64_t, 12> kCounts{
      0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571, 1006700565};
  return n < kCounts.size() ? kCounts[n] : 0;
}

Wide min_sw_lower_bound(std::uint64_t n, unsigned k) {
  if (k < 2) throw Error(ErrorKind::BadK, "k must be >= 2");
  return checked_mul(Wide{k - 1}, binomial(n, k));
}

std::string_view to_string(ScanSource source) {
  return source == ScanSource::Builtin ? "builtin" : "graph6-corpus";
}

const std::vector<std::uint64_t>& ScanReport::certified_exceptions() const {
  if (!complete)
    throw Error(ErrorKind::IncompleteCoverage,
                "orders up to " + std::to_string(required_max_n) + " are required but only " +
                    std::to_string(n_max_covered) + " are covered");
  return exceptions;
}

namespace {

struct Candidate {
  const Graph* graph;
  std::size_t rank;
};

void evaluate(unsigned k, std::uint64_t limit, std::span<const Candidate> graphs,
              std::vector<std::size_t>& best_rank) {
  const unsigned workers = worker_count();
  std::vector<std::vector<std::size_t>> partial(workers, std::vector<std::size_t>(limit + 1, SIZE_MAX));
  parallel_chunks(graphs.size(), 256, [&](unsigned worker, std::size_t begin, std::size_t end) {
    auto& mine = partial[worker];
    for (std::size_t i = begin; i < end; ++i) {
      const auto value = steiner_wiener_bounded(*graphs[i].graph, k, limit);
      if (!value || *value == 0) continue;
      auto& slot = mine[static_cast<std::size_t>(*value)];
      slot = std::min(slot, graphs[i].rank);
    }
  });
  for (const auto& mine : partial)
    for (std::size_t v = 0; v <= limit; ++v) best_rank[v] = std::min(best_rank[v], mine[v]);
}

}  // namespace

ScanReport scan(unsigned k, std::uint64_t limit, std::istream* corpus) {
  if (k < 2) throw Error(ErrorKind::BadK, "k must be >= 2");
  if (limit > (std::uint64_t{1} << 32)) throw Error(ErrorKind::TooLarge, "scan limit too large");
  ScanReport report;
  report.k = k;
  report.limit = limit;
  report.source = corpus ? ScanSource::Graph6Corpus : ScanSource::Builtin;

  // Orders below k contribute only the empty sum.
  std::size_t required = k - 1;
  for (std::size_t n = k; n <= kMaxVertices && min_sw_lower_bound(n, k) <= limit; ++n) required = n;
  report.required_max_n = required;

  std::set<std::size_t> covered;
  std::vector<Graph> corpus_graphs;
  std::vector<std::size_t> corpus_orders;
  const std::size_t builtin_top = std::min(required, kBuiltinMaxOrder);
  for (std::size_t n = 1; n <= builtin_top; ++n) {
    covered.insert(n);
    report.graph_counts[n] = enumerate_connected(n).size();
  }
  if (required < k) {
    for (std::size_t n = 1; n < k; ++n) covered.insert(n);
  }

  if (corpus) {
    std::map<std::size_t, std::unordered_set<std::uint64_t>> classes;
    std::map<std::size_t, std::uint64_t> uncanonical;
    std::string line;
    while (std::getline(*corpus, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
      if (line.empty()) continue;
      Graph g = parse_graph6(line);
      const std::size_t n = g.order();
      if (n <= builtin_top || !is_connected(g)) continue;
      if (n <= kMaxCanonicalOrder) {
        if (!classes[n].insert(canonical_code(g)).second) continue;
      } else {
        ++uncanonical[n];
      }
      if (n <= required) {
        corpus_graphs.push_back(std::move(g));
        corpus_orders.push_back(n);
      }
    }
    for (const auto& [n, codes] : classes) {
      report.graph_counts[n] = codes.size();
      if (codes.size() == known_connected_count(n)) covered.insert(n);
    }
    for (const auto& [n, count] : uncanonical) report.graph_counts[n] += count;
  }

  std::size_t contiguous = 0;
  while (covered.count(contiguous + 1)) ++contiguous;
  report.n_max_covered = contiguous;
  report.complete = contiguous >= required;

  // Rank = position in (builtin by order, then corpus in file order).
  std::vector<Candidate> candidates;
  std::vector<const Graph*> by_rank;
  for (std::size_t n = k; n <= builtin_top; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      candidates.push_back({&g, by_rank.size()});
      by_rank.push_back(&g);
    }
  for (const Graph& g : corpus_graphs) {
    candidates.push_back({&g, by_rank.size()});
    by_rank.push_back(&g);
  }
  std::vector<std::size_t> best_rank(limit + 1, SIZE_MAX);
  evaluate(k, limit, candidates, best_rank);

  for (std::uint64_t v = 1; v <= limit; ++v) {
    if (best_rank[v] == SIZE_MAX) {
      report.exceptions.push_back(v);
    } else {
      report.attainable.emplace(v, *by_rank[best_rank[v]]);
    }
  }
  return report;
}

}  // namespace swforge
