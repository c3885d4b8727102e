#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsgq/classify.hpp"
#include "lsgq/errors.hpp"
#include "lsgq/intutil.hpp"

#include <set>

using namespace lsgq;

namespace {

std::vector<PMatrix> plan_matrices(const RunPlan& plan, const Field& fq,
                                   const VSpace& v, const GroupTable& h) {
  StabilizerSpec spec;
  switch (plan.line) {
    case 1: spec = canonical_line1(fq, plan.ell); break;
    case 2: spec = canonical_line2(fq, plan.ell, plan.i); break;
    case 3: spec = canonical_line3(fq, plan.ell); break;
    default: spec = canonical_line4(fq, plan.ell, plan.j); break;
  }
  ValidatedSpec vs = validate_spec(spec);
  std::vector<PMatrix> mats;
  for (const Autoparatopism& e : g0_generators(vs, h))
    mats.push_back(induced_linear_action(v, h, e));
  return mats;
}

}  // namespace

TEST_CASE("induced linear action of x and y on V") {
  // x: (a,b) -> (-a-b, a);  y: (a,b) -> (a+b, -b)
  GroupTable h = elementary_abelian_group(5, 1);
  VSpace v(5, 1);
  auto [x, y] = make_x_y(h);
  PMatrix mx = induced_linear_action(v, h, x);
  PMatrix my = induced_linear_action(v, h, y);
  for (long long a = 0; a < 5; ++a)
    for (long long b = 0; b < 5; ++b) {
      CHECK(mx.apply_enc(v, v.enc_pair(a, b)) ==
            v.enc_pair(((10 - a - b) % 5), a));
      CHECK(my.apply_enc(v, v.enc_pair(a, b)) ==
            v.enc_pair((a + b) % 5, (5 - b) % 5));
    }
  // diagonal sigma acts blockwise
  Perm dbl({0, 2, 4, 1, 3});  // h -> 2h mod 5
  PMatrix md = induced_linear_action(v, h, diagonal(dbl));
  for (long long a = 0; a < 5; ++a)
    for (long long b = 0; b < 5; ++b)
      CHECK(md.apply_enc(v, v.enc_pair(a, b)) ==
            v.enc_pair(2 * a % 5, 2 * b % 5));
}

TEST_CASE("non-additive stabilizer elements are rejected") {
  // Swapping just two nonzero vectors of GF(2)^3 fixes 0 but is not
  // additive: f(1) + f(4) = 2 + 4 = 6 while f(1 + 4) = 5.
  GroupTable h = elementary_abelian_group(2, 3);
  VSpace v(2, 3);
  Perm bad = Perm::identity(8);
  std::swap(bad.img[1], bad.img[2]);
  CHECK_THROWS_AS(induced_linear_action(v, h, diagonal(bad)), NotLinear);
}

TEST_CASE("orbit spans") {
  // p=3, d=1, line 1: orbit of (1,1) spans V_1
  {
    Field fq(3, 1);
    VSpace v(3, 1);
    USpace u{&fq, 1};
    GroupTable h = elementary_abelian_group(3, 1);
    auto mats = plan_matrices({3, 1, 1, 1, 0, 0, 1}, fq, v, h);
    TaggedSubspace ts = orbit_span(v, u, v.enc_pair(1, 1), mats);
    CHECK(ts.tag == SpanTag::Vc);
    CHECK(ts.c == 1);
  }
  // p=7, d=1, line 1: orbit of (1,2) is V_2^# (6 vectors), span V_2
  {
    Field fq(7, 1);
    VSpace v(7, 1);
    USpace u{&fq, 1};
    GroupTable h = elementary_abelian_group(7, 1);
    auto mats = plan_matrices({7, 1, 1, 1, 0, 0, 1}, fq, v, h);
    TaggedSubspace ts = orbit_span(v, u, v.enc_pair(1, 2), mats);
    CHECK(ts.tag == SpanTag::Vc);
    CHECK(ts.c == 2);
    CHECK(mult_order(fq.element(2)) == 3);
    // the orbit itself is the nonzero part of the line
    std::set<long long> orb{v.enc_pair(1, 2)};
    bool grew = true;
    while (grew) {
      grew = false;
      for (long long w : std::set<long long>(orb)) {
        for (const PMatrix& m : mats) {
          if (orb.insert(m.apply_enc(v, w)).second) grew = true;
        }
      }
    }
    CHECK(orb.size() == 6);
  }
  // n = 2: independent pairs span everything (q-independent span lemma)
  {
    Field fq(2, 1);
    VSpace v(2, 2);
    USpace u{&fq, 2};
    GroupTable h = elementary_abelian_group(2, 2);
    StabilizerSpec spec;
    spec.line = 1;
    spec.f = &fq;
    spec.n = 2;
    spec.k_gens = gl_generators(fq, 2);
    ValidatedSpec vs = validate_spec(spec);
    std::vector<PMatrix> mats;
    for (const Autoparatopism& e : g0_generators(vs, h))
      mats.push_back(induced_linear_action(v, h, e));
    // (e1, e2) is an independent pair
    TaggedSubspace ts = orbit_span(v, u, v.enc_pair(1, 2), mats);
    CHECK(ts.tag == SpanTag::Full);
  }
}

TEST_CASE("orbit spans are invariant under the generators") {
  Field fq(7, 1);
  VSpace v(7, 1);
  USpace u{&fq, 1};
  GroupTable h = elementary_abelian_group(7, 1);
  auto mats = plan_matrices({7, 1, 1, 1, 0, 0, 1}, fq, v, h);
  for (long long venc = 1; venc < v.size(); ++venc) {
    TaggedSubspace ts = orbit_span(v, u, venc, mats);
    for (const PMatrix& m : mats)
      for (const auto& row : ts.space.basis) {
        long long img = m.apply_enc(v, v.encode(row));
        CHECK(ts.space.contains(v.decode(img)));
      }
  }
}

TEST_CASE("distinct K-orbits jointly span V when K is transitive") {
  Field fq(5, 1);
  VSpace v(5, 1);
  SemilinearMap w = SemilinearMap::scalar(fq, 1, fq.omega_code());
  // K = scalars acting diagonally on V: orbits are {(ta, tb)}
  auto k_orbit = [&](long long venc) {
    std::set<long long> orb;
    long long a = v.a_of(venc), b = v.b_of(venc);
    for (long long t = 1; t < 5; ++t)
      orb.insert(v.enc_pair(fq.mul(t, a), fq.mul(t, b)));
    return orb;
  };
  (void)w;
  for (long long v1 = 1; v1 < v.size(); ++v1)
    for (long long v2 = 1; v2 < v.size(); ++v2) {
      auto o1 = k_orbit(v1), o2 = k_orbit(v2);
      if (o1 == o2) continue;
      std::vector<std::vector<int>> vecs;
      for (long long x : o1) vecs.push_back(v.decode(x));
      for (long long x : o2) vecs.push_back(v.decode(x));
      CHECK(PSubspace::span(v.p, v.dim(), vecs).dim() == v.dim());
    }
}

TEST_CASE("witness case table matches direct orbit computation") {
  // line 1, p = 3: {1}
  {
    Field fq(3, 1);
    ValidatedSpec vs = validate_spec(canonical_line1(fq, 1));
    WitnessCaseSet t3 = witness_case_table(vs);
    CHECK(t3.c_set == std::vector<long long>{1});
  }
  // line 1, p = 7: the two order-3 scalars 2 and 4
  {
    Field fq(7, 1);
    ValidatedSpec vs = validate_spec(canonical_line1(fq, 1));
    CHECK(witness_case_table(vs).c_set == std::vector<long long>{2, 4});
  }
  // line 2, p = 2, d = 3, i = 1, l = 3: trace-zero b with c = b
  {
    Field fq(2, 3);
    ValidatedSpec vs = validate_spec(canonical_line2(fq, 3, 1));
    WitnessCaseSet t3 = witness_case_table(vs);
    CHECK(t3.c_set.size() == 3);
    for (long long c : t3.c_set) {
      long long tr = fq.add(c, fq.add(fq.frob(c, 1), fq.frob(c, 2)));
      CHECK(tr == 0);
    }
  }
  // line 5 case logic (no canonical construction exists over GammaL_1):
  // p = 3 gives {1}, p = 7 nothing
  {
    Field fq(3, 1);
    ValidatedSpec vs;
    vs.spec.line = 5;
    vs.spec.f = &fq;
    vs.ell = 1;
    vs.i = 1;
    vs.j = 1;
    vs.m = 1;
    CHECK(witness_case_table(vs).c_set == std::vector<long long>{1});
  }
}

TEST_CASE("main-theorem witness cases") {
  // p=3 d=1: k=1, witness V_1, quotient K_3
  ClassificationReport r3 = run_plan({3, 1, 1, 1, 0, 0, 1});
  CHECK(r3.outcome == Outcome::QuotientComplete);
  CHECK(r3.k == 1);
  REQUIRE(r3.witnesses.size() == 1);
  CHECK(r3.witnesses[0].tag == SpanTag::Vc);
  CHECK(r3.witnesses[0].c == 1);
  CHECK(r3.quotient_orders == std::vector<int>{3});

  // p=7 d=1: k=2, witnesses V_2 and V_4 (c and c^-1 of order 3)
  ClassificationReport r7 = run_plan({7, 1, 1, 1, 0, 0, 1});
  CHECK(r7.k == 2);
  std::set<long long> cs;
  for (auto& w : r7.witnesses) cs.insert(w.c);
  CHECK(cs == std::set<long long>{2, 4});
  CHECK(r7.quotient_orders == std::vector<int>{7, 7});

  // p=2 d=3 line 2: k = 3 = p^gcd(d,m)+1, quotients K_8 on 64 vertices
  ClassificationReport r8 = run_plan({2, 3, 1, 2, 1, 0, 3});
  CHECK(r8.k == 3);
  CHECK(r8.quotient_orders == std::vector<int>{8, 8, 8});
  CHECK(r8.m == 1);

  // p=5 d=1: quasiprimitive
  ClassificationReport r5 = run_plan({5, 1, 1, 1, 0, 0, 1});
  CHECK(r5.outcome == Outcome::VertexQuasiprimitive);
  CHECK(r5.k == 0);

  // closed-form table agreement holds on all of them
  for (const ClassificationReport* r : {&r3, &r7, &r8, &r5}) {
    bool found = false;
    for (auto& [name, value] : r->conditions)
      if (name == "witness_table_agreement") {
        CHECK(value == "true");
        found = true;
      }
    CHECK(found);
  }
}

TEST_CASE("n = 2 classification: GL_2(3) with p = 3 gives k = 1") {
  Field fq(3, 1);
  StabilizerSpec spec;
  spec.line = 1;
  spec.f = &fq;
  spec.n = 2;
  spec.k_gens = gl_generators(fq, 2);
  ClassificationReport r = complete_quotients(3, 2, 2, spec);
  CHECK(r.outcome == Outcome::QuotientComplete);
  CHECK(r.k == 1);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].tag == SpanTag::Vc);
  CHECK(r.witnesses[0].c == 1);
  CHECK(r.quotient_orders == std::vector<int>{9});
}

TEST_CASE("theorem 1.1 grid") {
  CHECK(verify_existence_condition(2, 1).exists_qc == false);
  CHECK(verify_existence_condition(2, 2).exists_qc == true);
  CHECK(verify_existence_condition(2, 3).exists_qc == true);
  CHECK(verify_existence_condition(3, 1).exists_qc == true);
  CHECK(verify_existence_condition(5, 1).exists_qc == false);
  CHECK(verify_existence_condition(7, 1).exists_qc == true);
  for (auto [p, d] : std::vector<std::pair<long long, int>>{
           {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}})
    CHECK(verify_existence_condition(p, d).match);
}

TEST_CASE("theorem 1.2 checker and its negative control") {
  ClassificationReport good = run_plan({3, 1, 1, 1, 0, 0, 1});
  CHECK(verify_quotient_count_bounds({good}));
  ClassificationReport fake = good;
  fake.k = 2;  // p = 3 with k = 2 contradicts the constraint
  fake.witnesses.push_back(fake.witnesses[0]);
  fake.quotient_orders.push_back(3);
  CHECK(!verify_quotient_count_bounds({fake}));
  ClassificationReport wrong_order = good;
  wrong_order.quotient_orders = {9};
  CHECK(!verify_quotient_count_bounds({wrong_order}));
}

TEST_CASE("p=3 d=1 exhaustive normal-subgroup cross-check") {
  CrossCheckResult cc = cross_check_p3d1();
  CHECK(cc.n_normal_subgroups > 2);
  CHECK(cc.n_complete_partitions == 1);
  CHECK(cc.matches_subspace_method);
}

TEST_CASE("canonical plans and small scan") {
  auto plans23 = canonical_plans(2, 3, Bounds());
  bool has_line2 = false;
  for (auto& pl : plans23)
    if (pl.line == 2 && pl.i == 1 && pl.ell == 3) has_line2 = true;
  CHECK(has_line2);
  // (5,3) would need 5^6 = 15625 vertices: over the default bound
  CHECK(canonical_plans(5, 3, Bounds()).empty());

  ScanResult sc = canonical_scan(3, 2, Bounds());
  CHECK(sc.count_bounds_ok);
  CHECK(!sc.reports.empty());
  for (auto& r : sc.reports)
    if (r.p == 3 && r.outcome == Outcome::QuotientComplete) CHECK(r.k == 1);
}

TEST_CASE("every scanned case agrees with the closed-form table") {
  ScanResult sc = canonical_scan(7, 3, Bounds());
  for (const ClassificationReport& r : sc.reports) {
    bool t3 = false, all_complete = false, arc = false;
    for (auto& [name, value] : r.conditions) {
      if (name == "witness_table_agreement" && value == "true") t3 = true;
      if (name == "all_candidate_quotients_complete" && value == "true")
        all_complete = true;
      if (name == "arc_transitive" && value == "true") arc = true;
    }
    CAPTURE(r.p);
    CAPTURE(r.d);
    CAPTURE(r.line);
    CHECK(t3);
    CHECK(all_complete);
    CHECK(arc);
    // no excluded connection-set line ever arises as an invariant subspace
    for (auto& [name, value] : r.conditions)
      CHECK(name != "excluded_line_hit");
  }
}

TEST_CASE("whenever k >= 3, k - 1 is a power of p with exponent dividing d") {
  ScanResult sc = canonical_scan(7, 3, Bounds());
  for (const ClassificationReport& r : sc.reports) {
    if (r.k < 3) continue;
    long long rest = r.k - 1;
    int e = 0;
    while (rest % r.p == 0) {
      rest /= r.p;
      ++e;
    }
    CHECK(rest == 1);
    CHECK(e >= 1);
    CHECK(r.d % e == 0);
  }
}

TEST_CASE("p = 3 runs outside line 2 have the diagonal witness") {
  ScanResult sc = canonical_scan(3, 3, Bounds());
  for (const ClassificationReport& r : sc.reports) {
    if (r.p != 3 || r.line == 2) continue;
    CHECK(r.outcome == Outcome::QuotientComplete);
    CHECK(r.k == 1);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].tag == SpanTag::Vc);
    CHECK(r.witnesses[0].c == 1);
  }
}

TEST_CASE("parallel scan matches serial scan") {
  ScanResult a = canonical_scan(3, 2, Bounds(), 1);
  ScanResult b = canonical_scan(3, 2, Bounds(), 2);
  REQUIRE(a.reports.size() == b.reports.size());
  for (size_t k = 0; k < a.reports.size(); ++k) {
    CHECK(a.reports[k].k == b.reports[k].k);
    CHECK(a.reports[k].outcome == b.reports[k].outcome);
  }
}

TEST_CASE("bounds are enforced") {
  Bounds tight;
  tight.max_graph_vertices = 5;
  CHECK_THROWS_AS(run_plan({3, 1, 1, 1, 0, 0, 1}, tight), BoundExceeded);
}
