#include <doctest.h>

#include "swforge/error.hpp"
#include "swforge/binomial_rep.hpp"
#include "swforge/inverse.hpp"
#include "swforge/scanner.hpp"

using namespace swforge;

TEST_SUITE("inverse") {

TEST_CASE("feasible intervals") {
  const Interval a = feasible_interval(12, 2, 0);
  CHECK(a.lo == 109);
  CHECK(a.hi == 121);
  CHECK_FALSE(a.empty());
  const Interval b = feasible_interval(12, 3, 0);
  CHECK(b.lo == 461);
  CHECK(b.hi == 605);
  CHECK(feasible_interval(2, 3, 0).empty());
  CHECK(feasible_interval(12, 3, 200).hi == 405);
}

TEST_CASE("invert examples") {
  const auto c110 = invert(2, 110, 20);
  REQUIRE(c110);
  CHECK(c110->spec.n() == 12);
  CHECK(c110->verified == 110);
  CHECK(c110->predicted == 110);
  CHECK(verify(build(c110->spec), 2, 110));
  CHECK(verify(build(NestedStarSpec(12, {3, 8})), 2, 110));

  const auto c605 = invert(3, 605, 20);
  REQUIRE(c605);
  CHECK(c605->spec.n() == 12);
  CHECK(c605->spec.hubs().empty());

  CHECK_FALSE(invert(2, 2, 30).has_value());
  CHECK_FALSE(invert(2, 5, 30).has_value());
  CHECK_THROWS_AS(invert(1, 5, 30), Error);

  const auto c1 = invert(2, 1, 5);
  REQUIRE(c1);
  CHECK(c1->spec.n() == 2);
}

TEST_CASE("verify") {
  CHECK(verify(make_star(12), 3, 605));
  CHECK_FALSE(verify(make_star(12), 3, 604));
  CHECK_THROWS_AS(verify(Graph::from_edge_list(3, {}), 2, 0), Error);
}

TEST_CASE("certificates are deterministic and recomputed") {
  for (Wide target = 605; target <= 700; ++target) {
    const auto a = invert(3, target, 40);
    const auto b = invert(3, target, 40);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->spec == b->spec);
    CHECK(verify(build(a->spec), 3, target));
  }
}

TEST_CASE("every target of an interval with a representable deficit is certified at that n") {
  for (unsigned k = 2; k <= 4; ++k)
    for (std::uint32_t n = 4; n <= 10; ++n) {
      const Interval iv = feasible_interval(n, k, 0);
      const Wide star = star_closed_form(n, k).value;
      for (SignedWide t = std::max<SignedWide>(iv.lo, 1); t <= iv.hi; ++t) {
        const auto target = static_cast<Wide>(t);
        // Smaller stars are tried first, so only targets above the previous
        // star value are forced to land on n.
        if (target <= star_closed_form(n - 1, k).value) continue;
        const bool representable = represent(star - target, k - 1, n - 1).has_value();
        const auto cert = invert(k, target, n);
        CHECK(cert.has_value() == representable);
        if (cert) CHECK(cert->spec.n() == n);
      }
    }
}

TEST_CASE("certified values are attainable in the exhaustive scan") {
  const ScanReport report = scan(3, 110);
  for (Wide target = 1; target <= 110; ++target) {
    const auto cert = invert(3, target, 12);
    if (cert) CHECK(report.attainable.count(static_cast<std::uint64_t>(target)) == 1);
  }
}

}  // TEST_SUITE
