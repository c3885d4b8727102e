#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsgq/ffield.hpp"
#include "lsgq/errors.hpp"
#include "lsgq/intutil.hpp"

#include <random>
#include <set>

using namespace lsgq;

TEST_CASE("prime field of order 2") {
  Field f = make_field(2, 1);
  CHECK(f.order() == 2);
  CHECK(f.omega_code() == 1);
}

TEST_CASE("GF(9): unit group cyclic of order 8") {
  Field f = make_field(3, 2);
  CHECK(f.order() == 9);
  std::set<long long> powers;
  long long acc = 1;
  for (int k = 0; k < 8; ++k) {
    powers.insert(acc);
    acc = f.mul(acc, f.omega_code());
  }
  CHECK(acc == 1);
  CHECK(powers.size() == 8);
}

TEST_CASE("GF(7): deterministic modulus rule") {
  // Modulus is the lex-smallest primitive monic x + c0, i.e. omega = p - c0
  // is the largest primitive root; the smallest generator of (Z/7)* is 3,
  // the largest is 5.
  std::set<long long> generators;
  for (long long g = 2; g < 7; ++g) {
    long long acc = 1;
    int ord = 0;
    do {
      acc = acc * g % 7;
      ++ord;
    } while (acc != 1);
    if (ord == 6) generators.insert(g);
  }
  CHECK(*generators.begin() == 3);
  Field f = make_field(7, 1);
  CHECK(f.omega_code() == *generators.rbegin());
  CHECK(f.omega_code() == 5);
}

TEST_CASE("make_field rejections") {
  CHECK_THROWS_AS(make_field(6, 1), NonPrime);
  CHECK_THROWS_AS(make_field(2, 0), DegreeOutOfRange);
  CHECK_THROWS_AS(make_field(2, 30), BoundExceeded);
}

TEST_CASE("frobenius_order") {
  Field f64 = make_field(2, 6);
  CHECK(frobenius_order(f64, 4) == 3);
  Field f9 = make_field(3, 2);
  CHECK(frobenius_order(f9, 1) == 2);
  Field f7 = make_field(7, 1);
  CHECK(frobenius_order(f7, 1) == 1);
}

TEST_CASE("fix_subfield") {
  Field f8 = make_field(2, 3);
  CHECK(fix_subfield(f8, 3).size() == 8);
  auto sub = fix_subfield(f8, 1);
  REQUIRE(sub.size() == 2);
  CHECK(sub[0].code() == 0);
  CHECK(sub[1].code() == 1);
  Field f9 = make_field(3, 2);
  auto sub9 = fix_subfield(f9, 1);
  CHECK(sub9.size() == 3);  // 3^gcd(2,1)
  for (auto& e : sub9) CHECK(e.code() < 3);  // the prime-field residues
}

TEST_CASE("mult_order") {
  Field f7 = make_field(7, 1);
  CHECK(mult_order(f7.one()) == 1);
  CHECK(mult_order(f7.element(2)) == 3);
  CHECK(mult_order(f7.element(4)) == 3);
  CHECK_THROWS_AS(mult_order(f7.zero()), ZeroElement);
}

TEST_CASE("trace") {
  Field f8 = make_field(2, 3);
  // Tr from GF(8) to GF(2): b + b^2 + b^4; exactly 3 nonzero roots.
  int zero_count = 0;
  for (long long b = 1; b < 8; ++b)
    if (trace(f8, 3, 1, f8.element(b)).is_zero()) ++zero_count;
  CHECK(zero_count == 3);
  CHECK(trace(f8, 3, 1, f8.zero()).is_zero());
  Field f9 = make_field(3, 2);
  CHECK(trace(f9, 2, 1, f9.one()).code() == 2);
  CHECK_THROWS_AS(trace(f9, 1, 2, f9.one()), IncompatibleSubfields);
}

TEST_CASE("trace is subfield-linear and surjective") {
  Field f(2, 6);
  // E = Fix(tau^3) = GF(8), K = Fix(tau^1) = GF(2)
  auto e_elems = fix_subfield(f, 3);
  std::set<long long> image;
  for (auto& b : e_elems) image.insert(trace(f, 3, 1, b).code());
  CHECK(image == std::set<long long>{0, 1});
  for (auto& a : e_elems)
    for (auto& b : e_elems) {
      auto lhs = trace(f, 3, 1, a + b);
      auto rhs = trace(f, 3, 1, a) + trace(f, 3, 1, b);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("trace scales by target-subfield elements") {
  // Tr from GF(81) = Fix(tau^2) to GF(9) = Fix(tau^... gcd(4,2) = 2):
  Field f(3, 4);
  auto sub = fix_subfield(f, 2);  // GF(9)
  for (auto& k : sub)
    for (long long b = 0; b < 81; b += 7) {
      auto tb = trace(f, 4, 2, f.element(b));
      auto tkb = trace(f, 4, 2, k * f.element(b));
      CHECK(tkb == k * tb);
    }
}

TEST_CASE("unit group cyclic over the small-field grid") {
  for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 97LL}) {
    for (int d = 1;; ++d) {
      long long q = 1;
      bool fits = true;
      for (int t = 0; t < d; ++t) {
        q *= p;
        if (q > 10000) {
          fits = false;
          break;
        }
      }
      if (!fits) break;
      Field f(p, d, 10000);
      // omega's powers hit every nonzero element exactly once
      std::vector<char> seen(q, 0);
      long long acc = 1;
      long long count = 0;
      do {
        CHECK(!seen[acc]);
        seen[acc] = 1;
        ++count;
        acc = f.mul(acc, f.omega_code());
      } while (acc != 1);
      CHECK(count == q - 1);
      // fix_subfield cardinalities
      for (int i = 1; i <= d; ++i)
        CHECK(long(fix_subfield(f, i).size()) ==
              ipow(p, int(gcd_ll(d, i))));
    }
  }
}

TEST_CASE("frobenius respects arithmetic") {
  std::mt19937 rng(20240817);
  for (long long p : {2LL, 3LL, 7LL}) {
    for (int d : {2, 3}) {
      Field f(p, d);
      std::uniform_int_distribution<long long> pick(0, f.order() - 1);
      for (int trial = 0; trial < 50; ++trial) {
        long long a = pick(rng), b = pick(rng);
        int i = 1 + int(rng() % d);
        CHECK(f.frob(f.add(a, b), i) == f.add(f.frob(a, i), f.frob(b, i)));
        CHECK(f.frob(f.mul(a, b), i) == f.mul(f.frob(a, i), f.frob(b, i)));
      }
    }
  }
}

TEST_CASE("modulus override config") {
  ModulusConfig cfg = ModulusConfig::parse_text("2 3 1 1 0 1\n");
  auto mod = cfg.lookup(2, 3);
  REQUIRE(mod.has_value());
  // x^3 + x + 1, the primitive cubic the deterministic rule does not pick
  // (the default for GF(8) is x^3 + x^2 + 1)
  Field f(2, 3, *mod);
  CHECK(f.order() == 8);
  CHECK(f.modulus() == std::vector<int>{1, 1, 0, 1});
  CHECK(Field(2, 3).modulus() == std::vector<int>{1, 0, 1, 1});
  // reducible override is rejected
  CHECK_THROWS_AS(Field(2, 3, std::vector<int>{1, 1, 1, 1}),
                  ArgumentOutOfRange);
}

TEST_CASE("element codes round-trip through coefficients") {
  Field f(5, 3);
  for (long long code : {0LL, 1LL, 37LL, 124LL}) {
    CHECK(f.code_of_coeffs(f.coeffs(code)) == code);
  }
}
