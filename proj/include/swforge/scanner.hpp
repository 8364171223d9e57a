#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string_view>
#include <vector>

#include "swforge/graph.hpp"
#include "swforge/wide.hpp"

namespace swforge {

/// Largest order the built-in enumerator serves to the scanner.
inline constexpr std::size_t kBuiltinMaxOrder = 8;
/// Largest order generate_connected accepts (corpus production).
inline constexpr std::size_t kGeneratorMaxOrder = 10;

/// One representative per isomorphism class of connected graphs on n
/// vertices, in ascending canonical-code order. Throws TooLarge for n > 8.
const std::vector<Graph>& enumerate_connected(std::size_t n);

/// Same classes for n <= 10, built by adding a vertex to every connected
/// graph on n-1 vertices and deduplicating by canonical code. Calls sink in
/// ascending canonical-code order.
void generate_connected(std::size_t n, const std::function<void(const Graph&)>& sink);

/// Number of connected graphs on n unlabeled vertices (n <= 11), 0 when
/// unknown.
std::uint64_t known_connected_count(std::size_t n);

/// (k-1) * C(n, k): every k-subset needs at least k-1 edges.
Wide min_sw_lower_bound(std::uint64_t n, unsigned k);

enum class ScanSource { Builtin, Graph6Corpus };
std::string_view to_string(ScanSource source);

struct ScanReport {
  unsigned k = 2;
  std::uint64_t limit = 0;
  /// Largest order that can still produce a value <= limit.
  std::size_t required_max_n = 0;
  /// Largest N such that every order 1..N was fully scanned.
  std::size_t n_max_covered = 0;
  ScanSource source = ScanSource::Builtin;
  /// Exceptions are certified only when complete.
  bool complete = false;
  /// Value -> first witness (smallest order, then enumeration order).
  std::map<std::uint64_t, Graph> attainable;
  std::vector<std::uint64_t> exceptions;
  /// Order -> connected isomorphism classes scanned.
  std::map<std::size_t, std::uint64_t> graph_counts;

  /// Exceptions, or IncompleteCoverage when the report is partial.
  const std::vector<std::uint64_t>& certified_exceptions() const;
};

/// Exhaustive SW_k spectrum up to `limit`. Orders up to 8 come from the
/// built-in enumerator; larger orders are taken from the optional graph6
/// corpus (one string per line, ">>graph6<<" headers and blank lines
/// ignored, disconnected graphs skipped). A corpus order counts as covered
/// when its distinct isomorphism classes match the known total.
ScanReport scan(unsigned k, std::uint64_t limit, std::istream* corpus = nullptr);

}  // namespace swforge
