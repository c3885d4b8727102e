#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsgq/csets.hpp"
#include "lsgq/intutil.hpp"

#include <set>

using namespace lsgq;

TEST_CASE("C1 examples") {
  // GF(7), i = 1: both 2 and 4 satisfy -c^-1 (c+1) = c
  CSetResult r = c1(7, 1, 1);
  CHECK(r.members == std::vector<long long>{2, 4});
  CHECK(r.agreement);
  // p = 3: C1 = {1}
  CHECK(c1(3, 1, 1).members == std::vector<long long>{1});
  // 3 | |tau|: cardinality p^(d,i) + 1
  CHECK(c1(2, 3, 1).members.size() == 3);
}

TEST_CASE("C2 examples") {
  CHECK(c2(7, 1, 1).members == std::vector<long long>{5});  // -2 mod 7
  CHECK(c2(2, 1, 1).members.empty());
  CHECK(c2(3, 2, 1).members.size() == 3);  // p^(d,i) with |tau| even
}

TEST_CASE("norm identities from the defining equations") {
  for (long long p : {2LL, 3LL, 5LL, 7LL}) {
    for (int d = 1; d <= 4; ++d) {
      long long q = 1;
      for (int t = 0; t < d; ++t) q *= p;
      if (q > 10000) continue;
      Field f(p, d);
      for (int i = 1; i <= d; ++i) {
        long long pi = 1;
        for (int t = 0; t < i; ++t) pi *= p;
        for (long long c : c1(f, i).members) {
          // c^(1 + p^i + p^(2i)) = 1
          long long e = 1 + pi + pi * pi;
          CHECK(f.pow(c, e) == 1);
        }
        if ((d / gcd_ll(d, i)) % 2 == 0)
          for (long long c : c2(f, i).members)
            CHECK(f.pow(f.add(c, 1), pi + 1) == 1);
      }
    }
  }
}

TEST_CASE("intersection with a fixed subfield") {
  Field f7(7, 1);
  CIntersection r = c1_intersect_fix(f7, 1, 1);
  CHECK(r.members == std::vector<long long>{2, 4});
  CHECK(r.agreement);
  Field f8(2, 3);
  CHECK(c1_intersect_fix(f8, 1, 1).members.empty());
  Field f3(3, 1);
  CHECK(c1_intersect_fix(f3, 1, 1).members == std::vector<long long>{1});
}

TEST_CASE("intersection of C1 and C2") {
  Field f3(3, 1);
  CHECK(c1_intersect_c2(f3, 1, 1).members == std::vector<long long>{1});
  Field f4(2, 2);
  CIntersection r = c1_intersect_c2(f4, 2, 1);
  // the two elements of order 3 in GF(4)
  REQUIRE(r.members.size() == 2);
  for (long long c : r.members) CHECK(mult_order(f4.element(c)) == 3);
  CHECK(r.agreement);
  Field f7(7, 1);
  CHECK(c1_intersect_c2(f7, 1, 1).members.empty());
}

TEST_CASE("closed form equals brute force over a compact grid") {
  for (long long p : {2LL, 3LL, 5LL, 7LL}) {
    for (int d = 1; d <= 4; ++d) {
      long long q = 1;
      for (int t = 0; t < d; ++t) q *= p;
      if (q > 3000) continue;
      Field f(p, d);
      for (int i = 1; i <= d; ++i) {
        CHECK(c1(f, i).agreement);
        CHECK(c2(f, i).agreement);
        for (int j = 1; j <= d; ++j) {
          CHECK(c1_intersect_fix(f, i, j).agreement);
          CHECK(c1_intersect_c2(f, i, j).agreement);
        }
      }
    }
  }
}
