#ifndef LSGQ_VERIFY_HPP
#define LSGQ_VERIFY_HPP

#include <string>
#include <vector>

#include "lsgq/classify.hpp"

namespace lsgq {

struct SuiteResult {
  bool ok = false;
  std::string summary;  // human-readable lines, trailing newline
};

/// Closed forms vs Euclidean oracle over the full (a, r, s) grid; reports
/// any counterexample and the triples where the published case condition
/// of the second identity disagrees with the proved form.
SuiteResult verify_div_lemma(int amax = 9, int rmax = 12, int smax = 12);

/// Closed form = brute force for C1/C2 and the two intersections over all
/// p in pset and all d with p^d <= max_field_order, i, j in [1, d];
/// cardinalities checked against p^(d,i)+1 / p^(d,i).
SuiteResult verify_csets_suite(const std::vector<long long>& pset, int dmax,
                               long long max_field_order = 10000);

/// lsg(H) arc-transitive under the full autoparatopism stabilizer exactly
/// for elementary abelian H, over all fifteen groups of order <= 9.
SuiteResult verify_arc_transitivity_suite(long long max_vertices = 10000);

/// The four example families with their expected quotient structure, plus
/// the q = 7 isomorphism with its explicit matrix witness.
SuiteResult verify_examples_suite(const Bounds& bounds = Bounds());

/// which: "p3d1", "p7d1", "p2d3", "existence", "k-constraint", or "all".
SuiteResult verify_theorem_cases(const std::string& which,
                                 const Bounds& bounds = Bounds());

/// Structural checks: the strongly-regular parameter family of lsg(H),
/// quotient diameters never exceeding the original's, and the exhaustive
/// normal-subgroup cross-check at p = 3, d = 1.
SuiteResult verify_structural_suite(const Bounds& bounds = Bounds());

}  // namespace lsgq

#endif
