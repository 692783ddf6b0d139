#include <doctest.h>

#include "lozenge/closed_forms.hpp"
#include "lozenge/errors.hpp"

using namespace lozenge;

TEST_CASE("building blocks") {
  CHECK(hyperfactorial(0) == 1);
  CHECK(hyperfactorial(4) == 12);
  CHECK(hyperfactorial(5) == 288);
  CHECK(binomial(11, 7) == 330);
  CHECK(pochhammer(Rational(5), 3) == Rational(210));
  CHECK(pochhammer(Rational(5), 0) == Rational(1));
  CHECK(pochhammer(Rational(5), -2) == Rational(1, 12));
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK_THROWS_AS(pochhammer(Rational(1), -1), PochhammerPole);
  CHECK_THROWS_AS(pochhammer(Rational(2), -3), PochhammerPole);
}

TEST_CASE("hexagon counts") {
  CHECK(macmahon(1, 1, 1) == 2);
  CHECK(macmahon(2, 2, 2) == 20);
  CHECK(macmahon(3, 3, 3) == 980);
  CHECK(macmahon(0, 5, 7) == 1);
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int c = 0; c <= 5; ++c) {
        CHECK(macmahon(a, b, c) == macmahon(b, c, a));
        CHECK(macmahon(a, b, c) == macmahon(b, a, c));
      }
}

TEST_CASE("the two Proctor forms agree") {
  for (int b = 0; b <= 8; ++b)
    for (int a = 0; a <= b; ++a)
      for (int c = 0; c <= 8; ++c) CHECK(proctor_count(a, b, c) == proctor_count_alt(a, b, c));
}

TEST_CASE("a = b+1 equals a = b") {
  for (int b = 0; b <= 6; ++b)
    for (int c = 0; c <= 6; ++c) {
      CHECK(proctor_count(b + 1, b, c) == proctor_count(b, b, c));
      CHECK(ciucu_weighted_count(b + 1, b, c) == ciucu_weighted_count(b, b, c));
      CHECK(s_count(b + 1, b, c) == s_count(b, b, c));
      CHECK(s_prime_count(b + 1, b, c) == s_prime_count(b, b, c));
    }
}

TEST_CASE("S counts: golden values and base families") {
  CHECK(s_count(0, 7, 3) == 330);
  CHECK(s_count(1, 1, 3) == 20);
  CHECK(s_count(1, 1, 0) == 2);
  for (int c = 0; c <= 8; ++c) CHECK(s_count(1, 1, c) == BigInt((c + 1) * (c + 2)));
  for (int b = 0; b <= 8; ++b)
    for (int c = 0; c <= 8; ++c) CHECK(s_count(0, b, c) == binomial(b + c + 1, b));
  CHECK(s_prime_count(1, 1, 1) == Rational(15, 4));
}

TEST_CASE("weighted counts: integrality after clearing the 1/2 weights") {
  for (int b = 0; b <= 8; ++b)
    for (int a = 0; a <= b; ++a)
      for (int c = 0; c <= 8; ++c) {
        CHECK((ciucu_weighted_count(a, b, c) * Rational(pow2(a))).is_integer());
        CHECK((s_prime_count(a, b, c) * Rational(pow2(a + 1))).is_integer());
        CHECK(ciucu_weighted_count(a, b, c) <= Rational(proctor_count(a, b, c)));
        CHECK(s_prime_count(a, b, c) <= Rational(s_count(a, b, c)));
      }
}

TEST_CASE("dividing the weighted S count by 2^a exceeds the unweighted count") {
  CHECK(s_prime_count_uncorrected(0, 1, 1) == Rational(5));
  CHECK(s_count(0, 1, 1) == 3);
  CHECK(s_prime_count_uncorrected(1, 1, 1) == Rational(15, 2));
  CHECK(s_prime_count_uncorrected(1, 1, 1) > Rational(s_count(1, 1, 1)));
}

TEST_CASE("STDH counts are integers") {
  for (int b = 1; b <= 8; ++b)
    for (int a = 0; a <= b; ++a)
      for (int c = 0; c <= 8; ++c) CHECK_NOTHROW(stdh_count(a, b, c));
  CHECK(stdh_count(3, 8, 3) == BigInt("1233890466471936"));
}

TEST_CASE("formula_value dispatch") {
  CHECK(formula_value({Family::Hexagon, 2, 2, 2}) == Rational(20));
  CHECK(formula_value({Family::SPrime, 1, 1, 1}) == Rational(15, 4));
  CHECK_THROWS_AS(formula_value({Family::Custom, 0, 0, 0}), DomainError);
  CHECK_THROWS_AS(formula_value({Family::S, 4, 2, 0}), DomainError);
}
