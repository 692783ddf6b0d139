// Acceptance suite: one PASS/FAIL line per criterion. Exact equality
// throughout; the only tolerances are the wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lozenge/closed_forms.hpp"
#include "lozenge/identities.hpp"

using namespace lozenge;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

std::string tuple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// Engines against a closed form on one region; brute force where it fits.
void against_engines(Outcome& o, const std::string& label, const Region& r, const Rational& expected) {
  const Rational dp = count_dp(r);
  o.expect(dp == expected, label + " dp " + dp.to_string() + " != " + expected.to_string());
  if (r.size() <= 64) {
    const Rational brute = count_bruteforce(r);
    o.expect(brute == expected, label + " brute " + brute.to_string() + " != " + expected.to_string());
  }
}

// 0 <= a <= b <= 4, c <= 4, plus a = b+1 <= 5.
std::vector<Triple> s_grid() {
  return grid(0, 5, 0, 4, 0, 4, [](const Triple& t) { return t.a <= t.b + 1; });
}

void reports_into(Outcome& o, const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    o.expect(r.pass, r.identity + tuple(r.a, r.b, r.c) + " lhs=" + r.lhs.to_string() + " rhs=" + r.rhs.to_string() +
                         (r.detail.empty() ? "" : " " + r.detail));
}

Outcome criterion1() {
  Outcome o;
  for (const Triple& t : s_grid())
    against_engines(o, "S" + tuple(t.a, t.b, t.c), build_S(t.a, t.b, t.c), Rational(s_count(t.a, t.b, t.c)));
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const Triple& t : s_grid())
    against_engines(o, "S'" + tuple(t.a, t.b, t.c), build_S_prime(t.a, t.b, t.c), s_prime_count(t.a, t.b, t.c));
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const Triple& t : grid(0, 4, 0, 4, 0, 4, [](const Triple& t) { return t.a <= t.b; })) {
    against_engines(o, "P" + tuple(t.a, t.b, t.c), build_P(t.a, t.b, t.c), Rational(proctor_count(t.a, t.b, t.c)));
    against_engines(o, "P'" + tuple(t.a, t.b, t.c), build_P_prime(t.a, t.b, t.c),
                    ciucu_weighted_count(t.a, t.b, t.c));
  }
  for (const Triple& t : grid(0, 8, 0, 8, 0, 8, [](const Triple& t) { return t.a <= t.b; }))
    o.expect(proctor_count(t.a, t.b, t.c) == proctor_count_alt(t.a, t.b, t.c), "Pochhammer form" + tuple(t.a, t.b, t.c));
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const Triple& t : grid(0, 3, 0, 3, 0, 3))
    against_engines(o, "hexagon" + tuple(t.a, t.b, t.c), build_hexagon(t.a, t.b, t.c),
                    Rational(macmahon(t.a, t.b, t.c)));
  for (const Triple& t : grid(0, 6, 0, 6, 0, 6)) {
    const Rational dp = count_dp(build_hexagon(t.a, t.b, t.c));
    o.expect(dp == Rational(macmahon(t.a, t.b, t.c)), "hexagon dp" + tuple(t.a, t.b, t.c));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  reports_into(o, check_base_cases(6));
  return o;
}

Outcome criterion6() {
  Outcome o;
  reports_into(o, run_grid(grid(1, 2, 2, 3, 0, 2, [](const Triple& t) { return t.a <= t.b; }),
                           [](const Triple& t) { return check_recurrence(t.a, t.b, t.c, CheckMode::Engine); },
                           "recurrence"));
  reports_into(o, run_grid(grid(1, 8, 2, 8, 0, 8, [](const Triple& t) { return t.a <= t.b; }),
                           [](const Triple& t) { return check_recurrence(t.a, t.b, t.c, CheckMode::Formula); },
                           "recurrence"));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  reports_into(o, run_grid(grid(1, 8, 2, 8, 0, 8, [](const Triple& t) { return t.a <= t.b; }),
                           [](const Triple& t) { return check_bigrec(t.a, t.b, t.c); }, "bigrec"));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(secs < 10.0, "took " + std::to_string(secs) + " s");
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (auto [a, b, c] : {std::tuple{0, 2, 1}, {1, 4, 2}, {2, 6, 2}, {3, 8, 3}})
    reports_into(o, {check_factorization(a, b, c)});
  reports_into(o, run_grid(grid(0, 7, 1, 8, 0, 8, [](const Triple& t) { return t.a <= t.b - 1; }),
                           [](const Triple& t) { return check_stdh_integrality(t.a, t.b, t.c); }, "factorization"));
  return o;
}

// Every host in the box on which the marked quadruple is valid. Validity is
// required on the recurrence domain 1 <= a <= b, b >= 2; elsewhere the marked
// cells can coincide or fall outside the host, and those tuples are skipped.
Outcome criterion9() {
  Outcome o;
  for (const Triple& t : grid(0, 2, 0, 3, 0, 2, [](const Triple& t) { return t.a <= t.b + 1; })) {
    const Region g = build_kuo_host(t.a, t.b, t.c);
    const KuoQuadruple q = kuo_quadruple(t.a, t.b, t.c);
    const bool required = t.a >= 1 && t.b >= 2 && t.a <= t.b;
    try {
      validate_quadruple(g, q);
    } catch (const DomainError& e) {
      o.expect(!required, "quadruple invalid at " + tuple(t.a, t.b, t.c) + ": " + e.what());
      continue;
    }
    CheckReport r = check_kuo(g, q);
    r.a = t.a;
    r.b = t.b;
    r.c = t.c;
    reports_into(o, {r});
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(0x10e2a6e5ULL);
  const Region hex = build_hexagon(3, 3, 3);
  const auto tilings = enumerate_tilings(hex, 1000);
  for (int n = 0; n < 200; ++n) {
    std::vector<TriCell> removed;
    if (n % 2 == 0) {
      // Drop a random set of lozenges from a random tiling: balanced and tileable.
      const Tiling& t = tilings[rng() % tilings.size()];
      for (const Lozenge& l : t.lozenges)
        if (rng() % 3 == 0) {
          removed.push_back(l.up);
          removed.push_back(l.down);
        }
    } else {
      // Drop equally many random Up and Down cells: balanced, often untileable.
      std::vector<TriCell> ups, downs;
      for (const TriCell& x : hex.cells()) (x.up() ? ups : downs).push_back(x);
      std::shuffle(ups.begin(), ups.end(), rng);
      std::shuffle(downs.begin(), downs.end(), rng);
      const std::size_t k = 1 + rng() % 8;
      removed.insert(removed.end(), ups.begin(), ups.begin() + k);
      removed.insert(removed.end(), downs.begin(), downs.begin() + k);
    }
    const Region r = remove_cells(hex, removed);
    o.expect(is_balanced(r), "sample " + std::to_string(n) + " unbalanced");
    const Rational dp = count_dp(r), brute = count_bruteforce(r);
    o.expect(dp == brute, "sample " + std::to_string(n) + ": dp " + dp.to_string() + " brute " + brute.to_string());

    const TriCell extra = r.cells()[rng() % r.size()];
    const Region mutated = remove_cells(r, std::span<const TriCell>(&extra, 1));
    o.expect(count_dp(mutated) == Rational(0) && count_bruteforce(mutated) == Rational(0),
             "mutation of sample " + std::to_string(n) + " not zero");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"S counts vs engines", criterion1},
      {"weighted S counts vs engines", criterion2},
      {"staircase hexagon counts (plain and weighted) vs engines; Pochhammer form", criterion3},
      {"hexagon counts vs engines", criterion4},
      {"base cases a=0 and a=b=1", criterion5},
      {"Kuo recurrence, engine and formula modes", criterion6},
      {"expanded recurrence, exact, under 10 s", criterion7},
      {"symmetric dented hexagon factorisation", criterion8},
      {"Kuo condensation on marked hosts", criterion9},
      {"dp = brute force on 200 random subregions of hexagon(3,3,3)", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2zu: %s  %s  [%zu checks, %.2f s]%s%s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.checks, secs, o.pass ? "" : "  first failure: ",
                o.first_failure.c_str());
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
