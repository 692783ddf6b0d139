#include <doctest.h>

#include <cstdlib>
#include <set>

#include "lozenge/engines.hpp"
#include "lozenge/errors.hpp"
#include "lozenge/families.hpp"

using namespace lozenge;

TEST_CASE("small goldens") {
  for (auto count : {count_bruteforce, count_dp}) {
    CHECK(count(build_hexagon(1, 1, 1), {}) == Rational(2));
    CHECK(count(build_hexagon(2, 2, 2), {}) == Rational(20));
    CHECK(count(Region{}, {}) == Rational(1));
    CHECK(count(Region({up_cell(0, 0)}), {}) == Rational(0));
    CHECK(count(Region({up_cell(0, 0), down_cell(3, 3)}), {}) == Rational(0));
    CHECK(count(build_S_prime(1, 1, 1), {}) == Rational(15, 4));
  }
}

TEST_CASE("engines agree on every family") {
  for (int b = 0; b <= 3; ++b)
    for (int a = 0; a <= b + 1; ++a)
      for (int c = 0; c <= 2; ++c)
        for (Family f : {Family::Hexagon, Family::P, Family::PPrime, Family::S, Family::SPrime, Family::STDH}) {
          if (f == Family::STDH && (a > b || b == 0)) continue;
          const Region r = build({f, a, b, c});
          if (r.size() > 64) continue;
          CAPTURE(family_name(f));
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CHECK(count_bruteforce(r) == count_dp(r));
        }
}

TEST_CASE("counts are invariant under lattice isometries") {
  for (const Region& r : {build_S_prime(2, 3, 1), build_P(2, 4, 2), build_STDH(1, 2, 1)}) {
    const Rational m = count_dp(r);
    for (int k = 0; k < 6; ++k)
      for (bool refl : {false, true}) {
        const Region t = transform(r, {k, refl});
        CHECK(count_dp(t) == m);
        if (t.size() <= 64) CHECK(count_bruteforce(t) == m);
      }
  }
}

TEST_CASE("enumeration lists each tiling once and sums to the count") {
  for (const Region& r : {build_hexagon(2, 2, 2), build_S_prime(1, 2, 1), build_P_prime(2, 2, 1)}) {
    const auto tilings = enumerate_tilings(r, 10000);
    const std::set<Tiling> distinct(tilings.begin(), tilings.end());
    CHECK(distinct.size() == tilings.size());
    CHECK(std::is_sorted(tilings.begin(), tilings.end()));
    Rational total;
    for (const Tiling& t : tilings) {
      CHECK(t.lozenges.size() * 2 == r.size());
      total += tiling_weight(r, t);
    }
    CHECK(total == count_dp(r));
  }
  CHECK(enumerate_tilings(build_hexagon(1, 1, 1), 2).size() == 2);
  CHECK_THROWS_AS(enumerate_tilings(build_hexagon(2, 2, 2), 19), LimitExceeded);
}

TEST_CASE("resource limits") {
  CHECK_THROWS_AS(count_bruteforce(build_hexagon(4, 4, 4), {64, 24}), LimitExceeded);
  CHECK_THROWS_AS(count_dp(build_hexagon(4, 4, 4), {64, 4}), LimitExceeded);
  CHECK(sweep_width(build_hexagon(2, 3, 4)) >= 5);
  CHECK(count_dp(build_hexagon(6, 6, 6)) == Rational(BigInt("1478619421136")));
}

TEST_CASE("environment overrides") {
  setenv("TILINGS_BRUTE_LIMIT", "10", 1);
  setenv("TILINGS_DP_WIDTH", "7", 1);
  const EngineLimits l = limits_from_env();
  CHECK(l.brute_cells == 10);
  CHECK(l.dp_width == 7);
  unsetenv("TILINGS_BRUTE_LIMIT");
  unsetenv("TILINGS_DP_WIDTH");
  CHECK(limits_from_env().brute_cells == 64);
  CHECK(limits_from_env().dp_width == 24);
}
