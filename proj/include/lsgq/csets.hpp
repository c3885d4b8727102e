#ifndef LSGQ_CSETS_HPP
#define LSGQ_CSETS_HPP

#include <string>
#include <vector>

#include "lsgq/ffield.hpp"

namespace lsgq {

// Root sets in GF(p^d), for a Frobenius power tau^i:
//   C1(p,d,i) = { c != 0 : c^(p^i) = -c^(-1) (c+1) }
//   C2(p,d,i) = { c != 0, c != -1 : c^(p^i) = -c (c+1)^(-1) }
// c = -1 is excluded from C2 scans since (c+1) has no inverse there; at
// p = 2 note -1 = 1, so the scan skips c = 1 and follows the raw equation.

enum class CSetKind { C1, C2 };
enum class CSetMethod { BruteForce, ClosedForm, Both };

struct CSetResult {
  CSetKind kind = CSetKind::C1;
  long long p = 0;
  int d = 0;
  long long i = 0;
  std::vector<long long> members;  // element codes, ascending
  CSetMethod method = CSetMethod::Both;
  std::string case_label;
  bool agreement = true;  // closed form == brute force (method Both)
};

/// With method Both (the default), both routes run, agreement is recorded,
/// and the brute-force set is returned as `members`.
CSetResult c1(const Field& f, long long i, CSetMethod m = CSetMethod::Both);
CSetResult c2(const Field& f, long long i, CSetMethod m = CSetMethod::Both);

CSetResult c1(long long p, int d, long long i,
              CSetMethod m = CSetMethod::Both,
              long long max_order = Field::kDefaultMaxOrder);
CSetResult c2(long long p, int d, long long i,
              CSetMethod m = CSetMethod::Both,
              long long max_order = Field::kDefaultMaxOrder);

struct CIntersection {
  std::vector<long long> members;        // raw set intersection (normative)
  std::vector<long long> lemma_members;  // per the case analysis
  std::string case_label;
  bool agreement = true;
};

/// C1(p,d,i) ∩ Fix(<tau^j>), both by raw intersection and by case analysis.
CIntersection c1_intersect_fix(const Field& f, long long i, long long j);

/// C1(p,d,i) ∩ C2(p,d,j), both routes.
CIntersection c1_intersect_c2(const Field& f, long long i, long long j);

}  // namespace lsgq

#endif
