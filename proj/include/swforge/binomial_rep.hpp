#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "swforge/wide.hpp"

namespace swforge {

/// m = C(x_1, d) + ... + C(x_r, d) with 1 <= x_1 < ... < x_r.
struct Representation {
  unsigned d = 1;
  std::vector<std::uint64_t> terms;
  Wide m = 0;

  /// Re-sums the terms and checks ordering and positivity.
  bool valid() const;
};

/// Complete search for a representation of m with distinct terms < max_x.
/// Tries terms largest first and backtracks, so the witness is the
/// lexicographically largest (compared from the top term down). Terms with
/// C(x, d) = 0 are never used. nullopt means no representation exists.
std::optional<Representation> represent(Wide m, unsigned d, std::uint64_t max_x);

/// Ordered s-tuples (x_1..x_s), each x_i in 1..bound (0..bound with
/// include_zero), with sum lambda_i * C(x_i, d) == m. With `distinct` the
/// coordinates must be pairwise different.
struct CountSpec {
  unsigned d = 1;
  std::vector<std::uint64_t> lambdas;
  Wide m = 0;
  std::uint64_t bound = 1;
  bool distinct = false;
  bool include_zero = false;

  /// ceil(m^(1/d) / 100), at least 1.
  static std::uint64_t default_bound(Wide m, unsigned d);
};

/// Exact count by dynamic programming over attainable sums; the distinct
/// variant applies Moebius inversion over set partitions of the variables,
/// merging the coefficients of each block. Throws InfeasibleWidth when a
/// count leaves 64-bit lanes or 128-bit totals, TooLarge when the sum table
/// would exceed 2^26 entries, BadSpec on malformed parameters.
Wide count_representations(const CountSpec& spec);

struct ExplicitBound {
  std::uint64_t bound;
};
/// ceil(m^(1/d) / 100).
struct DefaultBound {};
/// floor(m^(1/d)).
struct RootBound {};
using BoundRule = std::variant<ExplicitBound, DefaultBound, RootBound>;

std::uint64_t resolve_bound(const BoundRule& rule, Wide m, unsigned d);

struct ProbeRow {
  Wide m = 0;
  std::uint64_t bound = 0;
  Wide all = 0;       // N(m)
  Wide distinct = 0;  // N*(m)
  double normalized = 0.0;       // N(m) * m^(1 - s/d)
  double collision_share = 0.0;  // (N(m) - N*(m)) / N(m), 0 when N(m) = 0
};

std::vector<ProbeRow> asymptotic_probe(unsigned d, std::span<const std::uint64_t> lambdas,
                                       std::span<const Wide> ms, const BoundRule& rule);

/// Residue-class count of lambda_1 C(x_1,d) + ... == m (mod p^k_exp), the
/// x_i ranging over residues modulo p^(k_exp + t) with t = v_p(d!).
struct LocalCountSpec {
  std::uint64_t p = 2;
  unsigned k_exp = 1;
  unsigned d = 1;
  std::vector<std::uint64_t> lambdas;
  std::uint64_t m = 0;

  unsigned t() const;
};

/// Throws NotPrime, TooLargeModulus (variable modulus above 10^4),
/// InfeasibleWidth, BadSpec.
Wide count_local(const LocalCountSpec& spec);

bool is_prime(std::uint64_t p);

/// v_p(d!) by Legendre's formula.
unsigned factorial_valuation(std::uint64_t p, std::uint64_t d);

}  // namespace swforge
