#include "lsgq/csets.hpp"

#include <algorithm>

#include "lsgq/errors.hpp"
#include "lsgq/intutil.hpp"

namespace lsgq {

namespace {

std::vector<long long> sorted_unique(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<long long> order3_elements(const Field& f) {
  // Roots of c^2 + c + 1 among nonzero c other than 1; for p = 3 the only
  // root is 1, which has order 1, so this is empty there.
  std::vector<long long> out;
  for (long long c = 1; c < f.order(); ++c)
    if (c != 1 && f.mul(c, f.mul(c, c)) == 1) out.push_back(c);
  return out;
}

std::vector<long long> brute_c1(const Field& f, long long i) {
  std::vector<long long> out;
  for (long long c = 1; c < f.order(); ++c) {
    long long rhs = f.neg(f.mul(f.inv(c), f.add(c, 1)));
    if (f.frob(c, i) == rhs) out.push_back(c);
  }
  return out;
}

std::vector<long long> brute_c2(const Field& f, long long i) {
  const long long minus_one = f.neg(1);
  std::vector<long long> out;
  for (long long c = 1; c < f.order(); ++c) {
    if (c == minus_one) continue;
    long long rhs = f.neg(f.mul(c, f.inv(f.add(c, 1))));
    if (f.frob(c, i) == rhs) out.push_back(c);
  }
  return out;
}

std::vector<long long> closed_c1(const Field& f, long long i,
                                 std::string* label) {
  const long long p = f.p();
  const int d = f.d();
  long long gdi = gcd_ll(d, i);
  long long tau_order = d / gdi;
  if (tau_order % 3 != 0) {
    if (p == 3) {
      *label = "C1: |tau^i| ndiv 3, p = 3 -> {1}";
      return {1};
    }
    long long pm = 1;  // p^(d,i) mod 3
    for (long long t = 0; t < gdi; ++t) pm = (pm * (p % 3)) % 3;
    if (pm == 1) {
      *label = "C1: |tau^i| ndiv 3, p^(d,i) = 1 mod 3 -> order-3 elements";
      return order3_elements(f);
    }
    *label = "C1: |tau^i| ndiv 3 -> empty";
    return {};
  }
  // 3 | |tau^i|: C1 = { b^(p^i - 1) : b != 0, b + b^(p^i) + b^(p^(2i)) = 0 }.
  *label = "C1: 3 | |tau^i| -> {b^(p^i-1) : Tr-type sum of b vanishes}";
  std::vector<long long> out;
  for (long long b = 1; b < f.order(); ++b) {
    long long fb = f.frob(b, i);
    long long ffb = f.frob(fb, i);
    if (f.add(b, f.add(fb, ffb)) == 0) out.push_back(f.mul(fb, f.inv(b)));
  }
  return sorted_unique(out);
}

std::vector<long long> closed_c2(const Field& f, long long i,
                                 std::string* label) {
  const long long p = f.p();
  const int d = f.d();
  long long tau_order = d / gcd_ll(d, i);
  if (tau_order % 2 != 0) {
    if (p == 2) {
      *label = "C2: |tau^i| odd, p = 2 -> empty";
      return {};
    }
    *label = "C2: |tau^i| odd, p >= 3 -> {-2}";
    return {f.neg(2 % p)};
  }
  // |tau^i| even: C2 = { b - 1 : b != 1, b^(p^i + 1) = 1 }.
  *label = "C2: |tau^i| even -> {b - 1 : b^(p^i+1) = 1, b != 1}";
  std::vector<long long> out;
  for (long long b = 1; b < f.order(); ++b) {
    if (b == 1) continue;
    if (f.mul(f.frob(b, i), b) == 1) out.push_back(f.sub(b, 1));
  }
  return sorted_unique(out);
}

CSetResult build(const Field& f, long long i, CSetKind kind, CSetMethod m) {
  if (i < 1) throw ArgumentOutOfRange("c-set: i >= 1 required");
  CSetResult res;
  res.kind = kind;
  res.p = f.p();
  res.d = f.d();
  res.i = i;
  res.method = m;
  std::string label;
  std::vector<long long> brute, closed;
  if (m != CSetMethod::ClosedForm)
    brute = kind == CSetKind::C1 ? brute_c1(f, i) : brute_c2(f, i);
  if (m != CSetMethod::BruteForce)
    closed = kind == CSetKind::C1 ? closed_c1(f, i, &label)
                                  : closed_c2(f, i, &label);
  std::sort(closed.begin(), closed.end());
  switch (m) {
    case CSetMethod::BruteForce:
      res.members = brute;
      res.case_label = "brute force scan";
      break;
    case CSetMethod::ClosedForm:
      res.members = closed;
      res.case_label = label;
      break;
    case CSetMethod::Both:
      res.agreement = (brute == closed);
      res.members = brute;
      res.case_label = label;
      break;
  }
  return res;
}

}  // namespace

CSetResult c1(const Field& f, long long i, CSetMethod m) {
  return build(f, i, CSetKind::C1, m);
}

CSetResult c2(const Field& f, long long i, CSetMethod m) {
  return build(f, i, CSetKind::C2, m);
}

CSetResult c1(long long p, int d, long long i, CSetMethod m,
              long long max_order) {
  Field f(p, d, max_order);
  return c1(f, i, m);
}

CSetResult c2(long long p, int d, long long i, CSetMethod m,
              long long max_order) {
  Field f(p, d, max_order);
  return c2(f, i, m);
}

CIntersection c1_intersect_fix(const Field& f, long long i, long long j) {
  if (i < 1 || j < 1)
    throw ArgumentOutOfRange("c1_intersect_fix: i, j >= 1 required");
  CIntersection res;
  std::vector<long long> c1set = brute_c1(f, i);
  for (long long c : c1set)
    if (f.frob(c, j) == c) res.members.push_back(c);

  const long long p = f.p();
  const int d = f.d();
  long long tau_i_order = d / gcd_ll(d, i);
  long long gij = gcd_ll(i, j);
  if (tau_i_order % 3 != 0 || (j / gij) % 3 != 0) {
    long long pdi = 1, pdj = 1;
    for (long long t = 0; t < gcd_ll(d, i); ++t) pdi = (pdi * (p % 3)) % 3;
    for (long long t = 0; t < gcd_ll(d, j); ++t) pdj = (pdj * (p % 3)) % 3;
    if (pdi == 1 && pdj == 1) {
      res.lemma_members = order3_elements(f);
      res.case_label = "part 1: p^(d,i) = p^(d,j) = 1 mod 3 -> order-3";
    } else if (p == 3) {
      res.lemma_members = {1};
      res.case_label = "part 1: p = 3 -> {1}";
    } else {
      res.case_label = "part 1: empty";
    }
  } else {
    // 3 | |tau^i| and 3 | j/(i,j); then i/(i,j) is 1 or 2 mod 3.
    std::string sub;
    std::vector<long long> base = closed_c1(f, gij, &sub);
    if ((i / gij) % 3 == 1) {
      res.lemma_members = base;
      res.case_label = "part 2: i/(i,j) = 1 mod 3 -> C1(p,d,(i,j))";
    } else {
      for (long long c : base) res.lemma_members.push_back(f.inv(c));
      std::sort(res.lemma_members.begin(), res.lemma_members.end());
      res.case_label = "part 2: i/(i,j) = 2 mod 3 -> inverses of C1(p,d,(i,j))";
    }
  }
  res.agreement = (res.members == res.lemma_members);
  return res;
}

CIntersection c1_intersect_c2(const Field& f, long long i, long long j) {
  if (i < 1 || j < 1)
    throw ArgumentOutOfRange("c1_intersect_c2: i, j >= 1 required");
  CIntersection res;
  std::vector<long long> c1set = brute_c1(f, i);
  std::vector<long long> c2set = brute_c2(f, j);
  for (long long c : c1set)
    if (std::binary_search(c2set.begin(), c2set.end(), c))
      res.members.push_back(c);

  const long long p = f.p();
  const int d = f.d();
  long long tau_j_order = d / gcd_ll(d, j);
  if (p % 3 == 2 && tau_j_order % 2 == 0 && i % 2 == 0 && j % 2 == 1) {
    res.lemma_members = order3_elements(f);
    res.case_label =
        "part 3: p = 2 mod 3, |tau^j| even, i even, j odd -> order-3";
  } else if (p == 3) {
    res.lemma_members = {1};
    res.case_label = "part 3: p = 3 -> {1}";
  } else {
    res.case_label = "part 3: empty";
  }
  res.agreement = (res.members == res.lemma_members);
  return res;
}

}  // namespace lsgq
