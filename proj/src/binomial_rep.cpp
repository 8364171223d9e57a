#include "swforge/binomial_rep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_set>

#include "swforge/error.hpp"
#include "swforge/simd.hpp"

namespace swforge {

bool Representation::valid() const {
  Wide sum = 0;
  std::uint64_t previous = 0;
  for (std::uint64_t x : terms) {
    if (x <= previous) return false;
    previous = x;
    if (__builtin_add_overflow(sum, binomial(x, d), &sum)) return false;
  }
  return sum == m;
}

namespace {

class RepresentationSearch {
 public:
  explicit RepresentationSearch(unsigned d) : d_(d) {}

  bool solve(std::uint64_t hi, Wide remaining) {
    if (remaining == 0) return true;
    if (hi < d_) return false;
    // C(d,d) + ... + C(hi,d) = C(hi+1, d+1).
    if (reach(hi) < remaining) return false;
    if (!failed_.empty() && failed_.count(Key{hi, remaining})) return false;
    std::uint64_t x = largest_at_most(hi, remaining);
    for (; x >= d_ && x >= 1; --x) {
      if (reach(x) < remaining) break;
      const Wide value = binomial(x, d_);
      chosen_.push_back(x);
      if (solve(x - 1, remaining - value)) return true;
      chosen_.pop_back();
    }
    failed_.insert(Key{hi, remaining});
    return false;
  }

  std::vector<std::uint64_t> terms() const {
    std::vector<std::uint64_t> out(chosen_.rbegin(), chosen_.rend());
    return out;
  }

 private:
  struct Key {
    std::uint64_t hi;
    Wide remaining;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      const auto lo = static_cast<std::uint64_t>(k.remaining);
      const auto up = static_cast<std::uint64_t>(k.remaining >> 64);
      return std::hash<std::uint64_t>{}(lo ^ (up * 0x9e3779b97f4a7c15ULL) ^ (k.hi * 0xc2b2ae3d27d4eb4fULL));
    }
  };

  Wide reach(std::uint64_t x) const {
    try {
      return binomial(x + 1, d_ + 1);
    } catch (const Error&) {
      return kWideMax;
    }
  }

  Wide value_or_max(std::uint64_t x) const {
    try {
      return binomial(x, d_);
    } catch (const Error&) {
      return kWideMax;
    }
  }

  // Largest x in [d, hi] with C(x, d) <= remaining (C(., d) increases there).
  std::uint64_t largest_at_most(std::uint64_t hi, Wide remaining) const {
    std::uint64_t lo = d_;
    if (value_or_max(hi) <= remaining) return hi;
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (value_or_max(mid) <= remaining) lo = mid; else hi = mid;
    }
    return lo;
  }

  unsigned d_;
  std::vector<std::uint64_t> chosen_;
  std::unordered_set<Key, KeyHash> failed_;
};

}  // namespace

std::optional<Representation> represent(Wide m, unsigned d, std::uint64_t max_x) {
  if (d < 1) throw Error(ErrorKind::BadSpec, "d must be >= 1");
  if (max_x < 2) throw Error(ErrorKind::BadSpec, "max_x must be >= 2");
  const std::uint64_t top = max_x - 1;
  RepresentationSearch search(d);
  if (!search.solve(top, m)) return std::nullopt;
  return Representation{d, search.terms(), m};
}

std::uint64_t CountSpec::default_bound(Wide m, unsigned d) {
  // Smallest B >= 1 with (100 B)^d >= m.
  const Wide root = integer_root_floor(m, d);
  Wide b = root / 100;
  auto pow_ge = [&](Wide candidate) {
    Wide acc = 1;
    for (unsigned i = 0; i < d; ++i) {
      if (__builtin_mul_overflow(acc, candidate * 100, &acc)) return true;
    }
    return acc >= m;
  };
  while (!pow_ge(b)) ++b;
  return static_cast<std::uint64_t>(std::max<Wide>(b, 1));
}

namespace {

constexpr std::size_t kMaxSumTable = std::size_t{1} << 26;

// Ordered tuples, no distinctness, one coefficient per variable.
Wide count_tuples(std::span<const std::uint64_t> lambdas, unsigned d, Wide m, std::uint64_t bound,
                  bool include_zero) {
  if (m >= kMaxSumTable) throw Error(ErrorKind::TooLarge, "target too large for the sum table");
  const auto target = static_cast<std::size_t>(m);
  const std::uint64_t first = include_zero ? 0 : 1;

  // Values lambda * C(x, d) that do not exceed m, one entry per x.
  auto values_for = [&](std::uint64_t lambda) {
    std::vector<std::size_t> out;
    for (std::uint64_t x = first; x <= bound; ++x) {
      const Wide c = binomial(x, d);
      Wide v;
      if (__builtin_mul_overflow(c, Wide{lambda}, &v) || v > m) break;
      out.push_back(static_cast<std::size_t>(v));
    }
    return out;
  };

  const std::size_t s = lambdas.size();
  if (s == 1) {
    const auto vals = values_for(lambdas[0]);
    return static_cast<Wide>(std::count(vals.begin(), vals.end(), target));
  }

  const auto& kernels = simd::active_kernels();
  std::vector<std::uint64_t> ways(target + 1, 0);
  for (std::size_t v : values_for(lambdas[0])) ++ways[v];
  std::vector<std::uint64_t> next(target + 1);
  for (std::size_t i = 1; i + 1 < s; ++i) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t v : values_for(lambdas[i]))
      if (!kernels.accumulate_u64(next.data() + v, ways.data(), target + 1 - v))
        throw Error(ErrorKind::InfeasibleWidth, "partial count exceeds 64 bits");
    ways.swap(next);
  }
  Wide total = 0;
  for (std::size_t v : values_for(lambdas[s - 1]))
    total = checked_add(total, ways[target - v], ErrorKind::InfeasibleWidth);
  return total;
}

// Calls fn(block_sizes, block_lambda_sums) for every set partition of the
// variables, via restricted growth strings.
template <class Fn>
void for_each_set_partition(std::span<const std::uint64_t> lambdas, Fn&& fn) {
  const std::size_t s = lambdas.size();
  std::vector<std::size_t> block(s, 0);
  std::vector<std::size_t> max_prefix(s, 0);
  while (true) {
    const std::size_t blocks = *std::max_element(block.begin(), block.end()) + 1;
    std::vector<std::size_t> sizes(blocks, 0);
    std::vector<std::uint64_t> sums(blocks, 0);
    for (std::size_t i = 0; i < s; ++i) {
      ++sizes[block[i]];
      if (__builtin_add_overflow(sums[block[i]], lambdas[i], &sums[block[i]]))
        throw Error(ErrorKind::InfeasibleWidth, "coefficient sum overflow");
    }
    fn(sizes, sums);
    // Next restricted growth string.
    std::size_t i = s;
    while (i-- > 1) {
      if (block[i] <= max_prefix[i - 1]) {
        ++block[i];
        const std::size_t run = std::max(max_prefix[i - 1], block[i]);
        max_prefix[i] = run;
        for (std::size_t j = i + 1; j < s; ++j) {
          block[j] = 0;
          max_prefix[j] = run;
        }
        break;
      }
    }
    if (i == 0) return;
  }
}

}  // namespace

Wide count_representations(const CountSpec& spec) {
  if (spec.d < 1) throw Error(ErrorKind::BadSpec, "d must be >= 1");
  if (spec.lambdas.empty()) throw Error(ErrorKind::BadSpec, "need at least one variable");
  if (spec.bound < 1) throw Error(ErrorKind::BadSpec, "bound must be >= 1");
  for (std::uint64_t l : spec.lambdas)
    if (l == 0) throw Error(ErrorKind::BadSpec, "coefficients must be positive");
  if (!spec.distinct) return count_tuples(spec.lambdas, spec.d, spec.m, spec.bound, spec.include_zero);
  if (spec.lambdas.size() > 10) throw Error(ErrorKind::TooLarge, "distinct counting supports s <= 10");

  // Tuples constant on the blocks of a partition are counted by merging each
  // block into one variable whose coefficient is the block's sum. Moebius
  // inversion on the partition lattice isolates the all-distinct tuples:
  // mu(partition) = prod over blocks of (-1)^(|b|-1) (|b|-1)!.
  std::map<std::vector<std::uint64_t>, Wide> memo;
  SignedWide total = 0;
  for_each_set_partition(spec.lambdas, [&](const std::vector<std::size_t>& sizes, std::vector<std::uint64_t> sums) {
    SignedWide weight = 1;
    for (std::size_t sz : sizes)
      for (std::size_t j = 1; j < sz; ++j) weight *= -static_cast<SignedWide>(j);
    std::sort(sums.begin(), sums.end());
    auto it = memo.find(sums);
    if (it == memo.end())
      it = memo.emplace(sums, count_tuples(sums, spec.d, spec.m, spec.bound, spec.include_zero)).first;
    SignedWide term;
    if (it->second > static_cast<Wide>(std::numeric_limits<SignedWide>::max()) ||
        __builtin_mul_overflow(weight, static_cast<SignedWide>(it->second), &term) ||
        __builtin_add_overflow(total, term, &total))
      throw Error(ErrorKind::InfeasibleWidth, "inclusion-exclusion exceeds 127 bits");
  });
  if (total < 0) throw Error(ErrorKind::InfeasibleWidth, "negative distinct count");
  return static_cast<Wide>(total);
}

std::uint64_t resolve_bound(const BoundRule& rule, Wide m, unsigned d) {
  if (const auto* e = std::get_if<ExplicitBound>(&rule)) return e->bound;
  if (std::holds_alternative<DefaultBound>(rule)) return CountSpec::default_bound(m, d);
  return static_cast<std::uint64_t>(std::max<Wide>(integer_root_floor(m, d), 1));
}

std::vector<ProbeRow> asymptotic_probe(unsigned d, std::span<const std::uint64_t> lambdas,
                                       std::span<const Wide> ms, const BoundRule& rule) {
  std::vector<ProbeRow> rows;
  const double s = static_cast<double>(lambdas.size());
  for (Wide m : ms) {
    ProbeRow row;
    row.m = m;
    row.bound = resolve_bound(rule, m, d);
    CountSpec spec{d, {lambdas.begin(), lambdas.end()}, m, row.bound, false, false};
    row.all = count_representations(spec);
    spec.distinct = true;
    row.distinct = count_representations(spec);
    const double md = static_cast<double>(m);
    row.normalized = static_cast<double>(row.all) * std::pow(md, 1.0 - s / d);
    row.collision_share = row.all == 0 ? 0.0 : static_cast<double>(row.all - row.distinct) / static_cast<double>(row.all);
    rows.push_back(row);
  }
  return rows;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

unsigned factorial_valuation(std::uint64_t p, std::uint64_t d) {
  unsigned t = 0;
  for (std::uint64_t q = p; q <= d; q *= p) {
    t += static_cast<unsigned>(d / q);
    if (q > d / p) break;
  }
  return t;
}

unsigned LocalCountSpec::t() const { return factorial_valuation(p, d); }

Wide count_local(const LocalCountSpec& spec) {
  if (!is_prime(spec.p)) throw Error(ErrorKind::NotPrime, std::to_string(spec.p) + " is not prime");
  if (spec.k_exp < 1) throw Error(ErrorKind::BadSpec, "exponent must be >= 1");
  if (spec.d < 1) throw Error(ErrorKind::BadSpec, "d must be >= 1");
  if (spec.lambdas.empty()) throw Error(ErrorKind::BadSpec, "need at least one variable");
  constexpr std::uint64_t kMaxModulus = 10000;
  const unsigned t = spec.t();
  std::uint64_t var_mod = 1;
  for (unsigned i = 0; i < spec.k_exp + t; ++i) {
    var_mod *= spec.p;
    if (var_mod > kMaxModulus)
      throw Error(ErrorKind::TooLargeModulus, "variable modulus p^(k+t) exceeds 10^4");
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < spec.k_exp; ++i) q *= spec.p;

  // Pascal's rule modulo q: row[j] = C(x, j) mod q.
  std::vector<std::uint64_t> binom_mod(var_mod);
  {
    std::vector<std::uint64_t> row(spec.d + 1, 0);
    row[0] = 1 % q;
    for (std::uint64_t x = 0; x < var_mod; ++x) {
      binom_mod[x] = row[spec.d];
      for (std::size_t j = spec.d; j >= 1; --j) row[j] = (row[j] + row[j - 1]) % q;
    }
  }

  std::vector<Wide> ways(q, 0);
  ways[0] = 1;
  std::vector<Wide> next(q);
  std::vector<Wide> hist(q);
  for (std::uint64_t lambda : spec.lambdas) {
    std::fill(hist.begin(), hist.end(), 0);
    const std::uint64_t lam = lambda % q;
    for (std::uint64_t x = 0; x < var_mod; ++x) ++hist[static_cast<std::size_t>((binom_mod[x] * lam) % q)];
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t c = 0; c < q; ++c) {
      if (hist[c] == 0) continue;
      for (std::size_t r = 0; r < q; ++r) {
        if (ways[r] == 0) continue;
        const std::size_t to = (r + c) % q;
        next[to] = checked_add(next[to], checked_mul(ways[r], hist[c], ErrorKind::InfeasibleWidth),
                               ErrorKind::InfeasibleWidth);
      }
    }
    ways.swap(next);
  }
  return ways[static_cast<std::size_t>(spec.m % q)];
}

}  // namespace swforge
