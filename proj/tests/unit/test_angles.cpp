#include <doctest.h>

#include "img/angles.hpp"

using namespace img;

TEST_SUITE("angles") {

TEST_CASE("doubling orbit") {
  auto o = doubling_orbit(Angle(9, 56));
  std::vector<std::string> seen;
  for (const auto& a : o.orbit) seen.push_back(a.str());
  CHECK(seen == std::vector<std::string>{"9/56", "9/28", "9/14", "2/7", "4/7", "1/7"});
  CHECK(o.preperiod == 3);
  CHECK(o.period == 3);
  CHECK(o.orbit.back().doubled() == o.orbit[o.preperiod]);

  o = doubling_orbit(Angle(0, 1));
  CHECK(o.orbit.size() == 1);
  CHECK(o.preperiod == 0);
  CHECK(o.period == 1);

  o = doubling_orbit(Angle(1, 3));
  REQUIRE(o.orbit.size() == 2);
  CHECK(o.orbit[1] == Angle(2, 3));
  CHECK(o.period == 2);
}

TEST_CASE("angle parsing") {
  CHECK(Angle::parse("2/4") == Angle(1, 2));
  CHECK(Angle::parse("0") == Angle(0, 1));
  CHECK(Angle(5, 3) == Angle(2, 3));
  CHECK_THROWS_AS(Angle::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Angle::parse("x"), DomainError);
}

TEST_CASE("itinerary") {
  const Angle third(1, 3), seventh(1, 7), zero(0, 1);
  CHECK(itinerary(third, third, 4) == "1*1*");
  CHECK(itinerary(seventh, seventh, 3) == "11*");
  CHECK(itinerary(zero, zero, 4) == "****");
  // The literal arc labelling swaps 0 and 1.
  CHECK(itinerary(seventh, seventh, 3, true) == "00*");
}

TEST_CASE("kneading sequence") {
  auto k = kneading_sequence(Angle(9, 56));
  CHECK(k.raw() == "110(111)");
  CHECK(k.canonical == KneadingSpec::preperiodic("110", "1"));
  CHECK(k.kneading_period == 1);
  CHECK(k.period_reduced);

  k = kneading_sequence(Angle(1, 7));
  CHECK(k.canonical == KneadingSpec::periodic("11"));
  CHECK(k.kneading_period == 3);

  k = kneading_sequence(Angle(1, 2));
  CHECK(k.raw() == "1(0)");
  CHECK(k.canonical == KneadingSpec::preperiodic("1", "0"));
}

TEST_CASE("group from angle") {
  CHECK(group_from_angle(Angle(1, 6)).kneading() == KneadingSpec::preperiodic("1", "10"));
  const auto z = group_from_angle(Angle(0, 1));
  CHECK(z.kneading() == KneadingSpec::periodic(""));
  CHECK(z.n() == 1);
  CHECK(group_from_angle(Angle(2, 7)).kneading() == group_from_angle(Angle(1, 7)).kneading());
  // 4/7 shares the cycle of 1/7 but lands elsewhere: the airplane, not the rabbit.
  CHECK(group_from_angle(Angle(4, 7)).kneading() == KneadingSpec::periodic("10"));
}

TEST_CASE("canonical form invariants up to denominator 63") {
  for (std::int64_t q = 1; q <= 63; ++q)
    for (std::int64_t p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Angle theta(p, q);
      const auto k = kneading_sequence(theta);
      CAPTURE(theta.str());
      if (q % 2 == 1) {
        CHECK(k.canonical.is_periodic());
        const std::size_t n = k.kneading_period;
        const std::string raw = k.raw_prefix + k.raw_period + k.raw_period;
        for (std::size_t i = 0; i < raw.size(); ++i) CHECK((raw[i] == '*') == (i % n == n - 1));
        CHECK(k.canonical.v().size() + 1 == n);
      } else {
        REQUIRE_FALSE(k.canonical.is_periodic());
        const auto& w = k.canonical.w();
        const auto& v = k.canonical.v();
        CHECK(w.back() != v.back());
        CHECK(primitive_root(v).second == 1);
        CHECK(k.kneading_period == v.size());
        // Re-expansion reproduces the raw itinerary.
        std::string expanded = w;
        while (expanded.size() < k.raw_prefix.size() + 3 * k.raw_period.size()) expanded += v;
        std::string raw = k.raw_prefix;
        while (raw.size() < expanded.size()) raw += k.raw_period;
        CHECK(raw.substr(0, expanded.size()) == expanded);
      }
      CHECK(k.orbit.period % k.kneading_period == 0);
      // Complex conjugation: θ and -θ have the same kneading data.
      CHECK(kneading_sequence(Angle(q - p, q)).canonical == k.canonical);
    }
}

}  // TEST_SUITE
