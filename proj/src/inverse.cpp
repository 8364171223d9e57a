#include "swforge/inverse.hpp"

#include <algorithm>
#include <limits>

#include "swforge/binomial_rep.hpp"
#include "swforge/error.hpp"

namespace swforge {

Interval feasible_interval(std::uint64_t n, unsigned k, Wide m0) {
  const Wide star = star_closed_form(n, k).value;
  const Wide reach = checked_pow(n, k - 1);
  if (star > static_cast<Wide>(std::numeric_limits<SignedWide>::max()) ||
      reach > static_cast<Wide>(std::numeric_limits<SignedWide>::max()) ||
      m0 > static_cast<Wide>(std::numeric_limits<SignedWide>::max()))
    throw Error(ErrorKind::Overflow, "interval endpoints exceed 127 bits");
  const auto s = static_cast<SignedWide>(star);
  return {s - static_cast<SignedWide>(reach), s - static_cast<SignedWide>(m0)};
}

std::optional<InverseCertificate> invert(unsigned k, Wide target, std::uint32_t n_max) {
  if (k < 2) throw Error(ErrorKind::BadK, "k must be >= 2");
  n_max = std::min<std::uint32_t>(n_max, kMaxVertices);
  std::uint32_t n = 2;
  while (n <= n_max && star_closed_form(n, k).value < target) ++n;
  for (; n <= n_max; ++n) {
    const Wide star = star_closed_form(n, k).value;
    const Wide deficit = star - target;
    if (n < 3 && deficit != 0) continue;
    std::vector<std::uint32_t> hubs;
    if (deficit != 0) {
      const auto rep = represent(deficit, k - 1, n - 1);
      if (!rep) continue;
      for (std::uint64_t x : rep->terms) hubs.push_back(static_cast<std::uint32_t>(x));
    }
    NestedStarSpec spec(n, std::move(hubs));
    const Wide predicted = nested_star_closed_form(spec, k).value;
    const Wide verified = steiner_wiener(build(spec), k).value;
    if (predicted != target || verified != target) continue;
    return InverseCertificate{k, target, std::move(spec), predicted, verified};
  }
  return std::nullopt;
}

bool verify(const Graph& g, unsigned k, Wide claimed) { return steiner_wiener(g, k).value == claimed; }

}  // namespace swforge
