#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsgq/numth.hpp"
#include "lsgq/errors.hpp"

using namespace lsgq;

TEST_CASE("frozen examples, values computed by the Euclid oracle") {
  // part 1
  CHECK(gcd_minus_plus(2, 4, 2).value == 5);   // gcd(15, 5)
  CHECK(gcd_minus_plus(3, 3, 1).value == 2);   // gcd(26, 4)
  CHECK(gcd_minus_plus(2, 3, 3).value == 1);   // gcd(7, 9)
  // part 2
  CHECK(gcd_minus_tri(2, 3, 1).value == 7);    // gcd(7, 7)
  CHECK(gcd_minus_tri(2, 6, 2).value == 21);   // gcd(63, 21)
  CHECK(gcd_minus_tri(7, 2, 1).value == 3);    // gcd(48, 57)
  // part 3
  CHECK(gcd_plus_tri(2, 6, 4).value == 13);    // gcd(65, 273)
  CHECK(gcd_plus_tri(2, 3, 2).value == 3);     // gcd(9, 21)
  CHECK(gcd_plus_tri(2, 3, 1).value == 1);     // gcd(9, 7)
}

TEST_CASE("the published part-2 case condition disagrees with the oracle") {
  GcdCase c = gcd_minus_tri(2, 6, 2);
  CHECK(c.value == gcd_oracle(GcdPart::MinusTri, 2, 6, 2));
  CHECK(c.stated_mismatch);  // s/(r,s) = 1 is odd, yet the value is 21 not 1
  CHECK(!gcd_minus_tri(2, 3, 2).stated_mismatch);  // s/(r,s) even: readings agree
}

TEST_CASE("closed forms equal the oracle on a grid") {
  for (long long a = 2; a <= 6; ++a)
    for (long long r = 1; r <= 10; ++r)
      for (long long s = 1; s <= 10; ++s) {
        CHECK(gcd_minus_plus(a, r, s).value ==
              gcd_oracle(GcdPart::MinusPlus, a, r, s));
        CHECK(gcd_minus_tri(a, r, s).value ==
              gcd_oracle(GcdPart::MinusTri, a, r, s));
        CHECK(gcd_plus_tri(a, r, s).value ==
              gcd_oracle(GcdPart::PlusTri, a, r, s));
      }
}

TEST_CASE("gcd_minus_plus divides a^(2 gcd(r,s)) - 1") {
  for (long long a = 2; a <= 6; ++a)
    for (long long r = 1; r <= 8; ++r)
      for (long long s = 1; s <= 8; ++s) {
        long long g = r, t = s;
        while (t) { long long u = g % t; g = t; t = u; }
        int128 bound = ipow128(a, int(2 * g)) - 1;
        CHECK(bound % gcd_minus_plus(a, r, s).value == 0);
      }
}

TEST_CASE("argument validation and overflow rejection") {
  CHECK_THROWS_AS(gcd_minus_plus(1, 2, 2), ArgumentOutOfRange);
  CHECK_THROWS_AS(gcd_minus_tri(2, 0, 1), ArgumentOutOfRange);
  CHECK_THROWS_AS(gcd_oracle(GcdPart::MinusTri, 9, 1, 40),
                  ArgumentOutOfRange);  // 9^80 overflows 127 bits
}
