#pragma once

#include <cstdint>

#include "swforge/graph.hpp"

namespace swforge {

/// Largest order accepted by canonical_code (the code packs C(n,2) bits).
inline constexpr std::size_t kMaxCanonicalOrder = 11;

/// Isomorphism-invariant code: two graphs of the same order get the same
/// code iff they are isomorphic. The code is the upper-triangle adjacency
/// bit string (pair order (0,1),(0,2),(1,2),(0,3),...) of a canonical
/// relabeling, first pair in the most significant position, maximized over
/// the leaves of an individualization-refinement search. Throws TooLarge.
std::uint64_t canonical_code(const Graph& g);

/// Rebuilds the canonical representative from its code.
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// Canonical representative of g's isomorphism class.
inline Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

}  // namespace swforge
