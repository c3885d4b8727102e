#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsgq/constructions.hpp"
#include "lsgq/errors.hpp"

#include <algorithm>

using namespace lsgq;

TEST_CASE("prime power factoring") {
  CHECK(prime_power(8) == std::pair<long long, int>{2, 3});
  CHECK(prime_power(49) == std::pair<long long, int>{7, 2});
  CHECK(prime_power(7) == std::pair<long long, int>{7, 1});
  CHECK_THROWS_AS(prime_power(12), ArgumentOutOfRange);
}

TEST_CASE("lexicographic family") {
  ExampleFamily f = lexicographic(3, 2);
  CHECK(f.graph.n() == 6);
  for (int v = 0; v < 6; ++v) CHECK(f.graph.degree(v) == 4);
  CHECK(f.computed_k == 1);
  CHECK(f.quotient_orders == std::vector<int>{3});
  CHECK(predicates(f.quotient_graphs[0]).complete);
  CHECK(predicates(f.graph).diameter == 2);

  // n = 1 degenerates to K_m
  ExampleFamily k2 = lexicographic(2, 1);
  CHECK(k2.graph.n() == 2);
  CHECK(predicates(k2.graph).complete);
}

TEST_CASE("direct product family") {
  ExampleFamily f = direct_product(3, 4);
  CHECK(f.computed_k == 2);
  std::vector<int> orders = f.quotient_orders;
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{3, 4});

  ExampleFamily f33 = direct_product(3, 3);
  CHECK(f33.graph.n() == 9);
  for (int v = 0; v < 9; ++v) CHECK(f33.graph.degree(v) == 4);

  CHECK_THROWS_AS(direct_product(2, 2), ArgumentOutOfRange);
}

TEST_CASE("diagonal Cayley family") {
  ExampleFamily f5 = diagonal_cayley(5);
  CHECK(f5.graph.degree(0) == 8);  // (q-1)^2/2
  CHECK(f5.computed_k == 2);
  CHECK(f5.quotient_orders == std::vector<int>{5, 5});
  CHECK(predicates(f5.graph).connected);

  ExampleFamily f7 = diagonal_cayley(7);
  CHECK(f7.graph.degree(0) == 18);  // (q-1)^2/2 = 18 = 3(q-1) exactly at q=7
  CHECK(f7.computed_k == 2);

  CHECK_THROWS_AS(diagonal_cayley(3), ArgumentOutOfRange);
  CHECK_THROWS_AS(diagonal_cayley(4), ArgumentOutOfRange);
}

TEST_CASE("lsg example family") {
  ExampleFamily f3 = lsg_example(3);
  CHECK(f3.expected_k == 1);
  CHECK(f3.computed_k == 1);
  CHECK(f3.quotient_orders == std::vector<int>{3});

  ExampleFamily f4 = lsg_example(4);
  CHECK(f4.computed_k == 2);
  CHECK(f4.quotient_orders == std::vector<int>{4, 4});

  ExampleFamily f5 = lsg_example(5);
  CHECK(f5.expected_k == 0);
  CHECK(f5.computed_k == 0);

  ExampleFamily f7 = lsg_example(7);
  CHECK(f7.computed_k == 2);
  CHECK(f7.graph.degree(0) == 18);  // 3(q-1)
}

TEST_CASE("lsg example is a latin square graph") {
  for (long long q : {2LL, 3LL, 4LL, 5LL, 7LL, 8LL, 9LL}) {
    ExampleFamily f = lsg_example(q);
    auto [p, dq] = prime_power(q);
    Graph ls = lsg(elementary_abelian_group(p, dq));
    auto iso = isomorphic(f.graph, ls);
    CHECK(iso.has_value());
  }
}

TEST_CASE("engine-computed k equals the expected k across parameters") {
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n)
      CHECK(lexicographic(m, n).computed_k == 1);
  for (int m = 3; m <= 5; ++m)
    for (int n = 3; n <= 5; ++n)
      CHECK(direct_product(m, n).computed_k == 2);
  for (long long q : {5LL, 7LL, 9LL})
    CHECK(diagonal_cayley(q).computed_k == 2);
  for (long long q : {2LL, 3LL, 4LL, 5LL, 7LL, 8LL, 9LL}) {
    ExampleFamily f = lsg_example(q);
    CHECK(f.computed_k == f.expected_k);
  }
}
