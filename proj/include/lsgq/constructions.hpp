#ifndef LSGQ_CONSTRUCTIONS_HPP
#define LSGQ_CONSTRUCTIONS_HPP

#include <memory>
#include <string>
#include <vector>

#include "lsgq/classify.hpp"
#include "lsgq/graph.hpp"

namespace lsgq {

enum class FamilyKind { Lexicographic, DirectProduct, DiagonalCayley, Lsg };

/// One of the worked example families, its graph, and the quotient
/// structure the engine actually finds.  expected_k = 0 encodes the
/// vertex-quasiprimitive outcome.
struct ExampleFamily {
  FamilyKind kind = FamilyKind::Lexicographic;
  std::string name;
  std::vector<long long> params;
  Graph graph;
  int expected_k = 0;
  int computed_k = 0;
  std::vector<int> quotient_orders;
  std::vector<std::string> witness_labels;
  std::vector<Graph> quotient_graphs;
  std::string notes;
};

/// K_m[empty_n]: vertices {1..m} x {1..n}, edges where the first coordinate
/// differs.  The unique complete quotient is K_m, over the blocks of
/// constant first coordinate.
ExampleFamily lexicographic(int m, int n, const Bounds& bounds = Bounds());

/// K_m x K_n: edges where both coordinates differ; quotients K_m and K_n
/// over the two coordinate-block partitions.  Needs m, n >= 3 (smaller
/// direct products are disconnected or degenerate).
ExampleFamily direct_product(int m, int n, const Bounds& bounds = Bounds());

/// Cay(F_q^2, S) with S the orbit of (1,1) under the diagonal matrices
/// diag(a, b) with ab a nonzero square; q an odd prime power >= 5.
/// Quotient-complete with k = 2; both quotients are K_q, over translations
/// by F_q + 0 and 0 + F_q.
ExampleFamily diagonal_cayley(long long q, const Bounds& bounds = Bounds());

/// Cay(F_q^2, S) with G_0 = <scalars, [[1,-1],[1,0]]> and S the orbit of
/// (1,0), i.e. {(a,0), (0,a), (a,-a)}.  k = 1 when q = 0 mod 3 (witness
/// V_1), k = 2 when q = 1 mod 3 (witnesses V_c, V_{c^-1} with c^2+c+1 = 0),
/// vertex-quasiprimitive when q = 2 mod 3.
ExampleFamily lsg_example(long long q, const Bounds& bounds = Bounds());

/// Factor q into (p, d) with p prime; rejects non-prime-powers.
std::pair<long long, int> prime_power(long long q);

}  // namespace lsgq

#endif
