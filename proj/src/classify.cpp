#include "lsgq/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "lsgq/errors.hpp"
#include "lsgq/intutil.hpp"

namespace lsgq {

Bounds Bounds::from_env() {
  Bounds b;
  if (const char* s = std::getenv("LSGQ_MAX_FIELD_ORDER"))
    b.max_field_order = std::atoll(s);
  if (const char* s = std::getenv("LSGQ_MAX_GRAPH_VERTICES"))
    b.max_graph_vertices = std::atoll(s);
  if (const char* s = std::getenv("LSGQ_MAX_GROUP_SIZE"))
    b.max_group_size = std::atoll(s);
  return b;
}

PMatrix induced_linear_action(const VSpace& v, const GroupTable& h,
                              const Autoparatopism& e) {
  PMatrix mat;
  mat.p = v.p;
  mat.dim = v.dim();
  mat.m.assign(mat.dim * mat.dim, 0);
  auto image_pair = [&](long long a, long long b) {
    std::array<int, 3> img = e.apply({int(a), int(b), h.mul(int(a), int(b))});
    return v.enc_pair(img[0], img[1]);
  };
  for (int t = 0; t < mat.dim; ++t) {
    long long unit = 1;
    for (int k = 0; k < (t < v.d ? t : t - v.d); ++k) unit *= v.p;
    long long venc = t < v.d ? v.enc_pair(unit, 0) : v.enc_pair(0, unit);
    std::vector<int> row = v.decode(image_pair(v.a_of(venc), v.b_of(venc)));
    for (int c = 0; c < mat.dim; ++c) mat.m[t * mat.dim + c] = row[c];
  }
  // The matrix must reproduce the element's action everywhere; failure
  // means a non-additive component slipped in.
  for (long long venc = 0; venc < v.size(); ++venc)
    if (mat.apply_enc(v, venc) != image_pair(v.a_of(venc), v.b_of(venc)))
      throw NotLinear("induced_linear_action: element is not additive on V");
  return mat;
}

TaggedSubspace orbit_span(const VSpace& v, const USpace& u, long long vec_enc,
                          const std::vector<PMatrix>& gens) {
  if (vec_enc == 0)
    return tag_subspace(v, u, PSubspace::zero(v.p, v.dim()));
  std::vector<long long> orb{vec_enc};
  std::unordered_set<long long> seen{vec_enc};
  for (size_t k = 0; k < orb.size(); ++k)
    for (const PMatrix& g : gens) {
      long long w = g.apply_enc(v, orb[k]);
      if (seen.insert(w).second) orb.push_back(w);
    }
  std::vector<std::vector<int>> vecs;
  vecs.reserve(orb.size());
  for (long long w : orb) vecs.push_back(v.decode(w));
  return tag_subspace(v, u, PSubspace::span(v.p, v.dim(), vecs));
}

WitnessCaseSet witness_case_table(const ValidatedSpec& vs) {
  const Field& f = *vs.spec.f;
  const long long p = f.p();
  const int D = f.d();  // effective degree of F_q over GF(p)
  const int line = vs.spec.line;
  const int ell = vs.ell, i = vs.i, j = vs.j, m = vs.m;
  WitnessCaseSet out;

  auto order3 = [&]() {
    std::vector<long long> cs;
    for (long long c = 2; c < f.order(); ++c)
      if (f.mul(c, f.mul(c, c)) == 1) cs.push_back(c);
    return cs;
  };
  auto trace_zero_powers = [&](bool inverse_exp) {
    // c = b^(p^m - 1) (or b^(1 - p^m)) over b != 0 with
    // b + b^(p^m) + b^(p^(2m)) = 0.
    std::set<long long> cs;
    for (long long b = 1; b < f.order(); ++b) {
      long long fb = f.frob(b, m);
      long long ffb = f.frob(fb, m);
      if (f.add(b, f.add(fb, ffb)) != 0) continue;
      long long c = f.mul(fb, f.inv(b));  // b^(p^m - 1)
      if (inverse_exp) c = f.inv(c);
      cs.insert(c);
    }
    return std::vector<long long>(cs.begin(), cs.end());
  };

  const bool p1 = (p % 3 == 1);
  const bool p2 = (p % 3 == 2);
  switch (line) {
    case 1:
      if (p == 3) {
        out.c_set = {1};
        out.case_label = "line 1: p = 3 -> c = 1";
      } else if (p1 || (p2 && D % 2 == 0 && ell % 2 == 0)) {
        out.c_set = order3();
        out.case_label = "line 1: |c| = 3";
      } else {
        out.case_label = "line 1: no V_c";
      }
      break;
    case 2: {
      const long long tau_i_ord = D / gcd_ll(D, i);
      const bool a = (tau_i_ord % 3 != 0) || ((ell / m) % 3 != 0);
      if (p == 3 && a) {
        out.c_set = {1};
        out.case_label = "line 2: p = 3, (3 ndiv |tau^i| or 3 ndiv l/m) -> c=1";
      } else if (p1 && a) {
        out.c_set = order3();
        out.case_label = "line 2: p = 1 mod 3 -> |c| = 3";
      } else if (p2 && D % 2 == 0 && i % 2 == 0 && ell % 2 == 0 && a) {
        out.c_set = order3();
        out.case_label = "line 2: p = 2 mod 3, d, i, l even -> |c| = 3";
      } else if (!a && (i / m) % 3 == 1) {
        out.c_set = trace_zero_powers(false);
        out.case_label = "line 2: 3 | |tau^i|, 3 | l/m, i/m = 1 mod 3 -> "
                         "c = b^(p^m-1)";
      } else if (!a && (i / m) % 3 == 2) {
        out.c_set = trace_zero_powers(true);
        out.case_label = "line 2: 3 | |tau^i|, 3 | l/m, i/m = 2 mod 3 -> "
                         "c = b^(1-p^m)";
      } else {
        out.case_label = "line 2: no V_c";
      }
      break;
    }
    case 3:
      if (p == 3) {
        out.c_set = {1};
        out.case_label = "line 3: p = 3 -> c = 1";
      } else {
        out.case_label = "line 3: no V_c";
      }
      break;
    case 4:
      if (p == 3) {
        out.c_set = {1};
        out.case_label = "line 4: p = 3 -> c = 1";
      } else if (p2 && D % 2 == 0 && j % 2 == 1 && ell % 2 == 0) {
        out.c_set = order3();
        out.case_label = "line 4: p = 2 mod 3, d even, j odd, l even -> |c|=3";
      } else {
        out.case_label = "line 4: no V_c";
      }
      break;
    case 5: {
      const long long tau_j_ord = D / gcd_ll(D, j);
      if (p == 3) {
        out.c_set = {1};
        out.case_label = "line 5: p = 3 -> c = 1";
      } else if (p2 && tau_j_ord % 2 == 0 && i % 2 == 0 && j % 2 == 1 &&
                 ell % 2 == 0) {
        out.c_set = order3();
        out.case_label =
            "line 5: p = 2 mod 3, |tau^j| even, i even, j odd, l even -> |c|=3";
      } else {
        out.case_label = "line 5: no V_c";
      }
      break;
    }
    default:
      throw SpecLineMismatch("witness_case_table: line out of range");
  }
  // Domain is F_q^# minus {-1}; the formulas above never produce 0 or -1,
  // but keep the filter as a guard.
  const long long minus1 = f.neg(1);
  std::vector<long long> filtered;
  for (long long c : out.c_set)
    if (c != 0 && (p == 2 || c != minus1)) filtered.push_back(c);
  out.c_set = filtered;
  std::sort(out.c_set.begin(), out.c_set.end());
  return out;
}

QuotientAnalysis analyze_quotients(const VSpace& v, const USpace& u,
                                   const Graph& gamma,
                                   const std::vector<PMatrix>& gens,
                                   const std::vector<PSubspace>& excluded) {
  QuotientAnalysis out;
  const long long size = v.size();

  // Orbits of V^# and their spans.
  std::vector<char> seen(size, 0);
  seen[0] = 1;
  std::vector<TaggedSubspace> spans;
  for (long long start = 1; start < size; ++start) {
    if (seen[start]) continue;
    std::vector<long long> orb{start};
    seen[start] = 1;
    for (size_t k = 0; k < orb.size(); ++k)
      for (const PMatrix& g : gens) {
        long long w = g.apply_enc(v, orb[k]);
        if (!seen[w]) {
          seen[w] = 1;
          orb.push_back(w);
        }
      }
    std::vector<std::vector<int>> vecs;
    vecs.reserve(orb.size());
    for (long long w : orb) vecs.push_back(v.decode(w));
    TaggedSubspace ts = tag_subspace(v, u, PSubspace::span(v.p, v.dim(), vecs));
    out.orbit_log.emplace_back(start, ts.label());
    spans.push_back(ts);
  }

  // Distinct proper nonzero spans, closed under pairwise joins: exactly the
  // proper invariant subspaces (an invariant subspace is a union of orbits
  // and therefore a join of orbit spans).
  std::set<PSubspace> inv;
  for (const TaggedSubspace& ts : spans)
    if (ts.space.dim() > 0 && ts.space.dim() < v.dim()) inv.insert(ts.space);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PSubspace> cur(inv.begin(), inv.end());
    for (size_t a = 0; a < cur.size(); ++a)
      for (size_t b = a + 1; b < cur.size(); ++b) {
        PSubspace jn = cur[a].join(cur[b]);
        if (jn.dim() < v.dim() && !inv.count(jn)) {
          inv.insert(jn);
          grew = true;
        }
      }
  }
  for (const PSubspace& s : inv) out.invariant.push_back(tag_subspace(v, u, s));

  // Quotient of gamma by the cosets of each invariant subspace.
  for (const TaggedSubspace& ts : out.invariant) {
    std::vector<int> block_of(size, -1);
    std::map<long long, int> rep_to_block;
    for (long long venc = 0; venc < size; ++venc) {
      std::vector<int> x = v.decode(venc);
      // canonical coset representative: reduce by the echelon basis
      for (const auto& r : ts.space.basis) {
        int piv = -1;
        for (int c = 0; c < v.dim(); ++c)
          if (r[c] != 0) {
            piv = c;
            break;
          }
        if (x[piv] != 0) {
          long long fct = x[piv];
          for (int c = 0; c < v.dim(); ++c)
            x[c] = int(((x[c] - fct * r[c]) % v.p + v.p) % v.p);
        }
      }
      long long rep = v.encode(x);
      auto it = rep_to_block.find(rep);
      if (it == rep_to_block.end())
        it = rep_to_block.emplace(rep, int(rep_to_block.size())).first;
      block_of[venc] = it->second;
    }
    VertexPartition part;
    part.block_of = block_of;
    part.n_blocks = int(rep_to_block.size());
    Graph q = quotient(gamma, part);
    GraphPredicates pr = predicates(q, /*with_srg=*/false);
    if (pr.diameter) {
      if (!out.max_quotient_diameter ||
          *pr.diameter > *out.max_quotient_diameter)
        out.max_quotient_diameter = *pr.diameter;
    }
    bool nontrivial = q.n() >= 2;
    if (!pr.complete && nontrivial) out.all_candidates_complete = false;
    bool is_excluded = false;
    for (const PSubspace& ex : excluded)
      if (ex == ts.space) is_excluded = true;
    if (is_excluded) {
      out.excluded_hits.emplace_back(ts.label(), pr.complete);
      continue;
    }
    if (pr.complete && nontrivial) {
      out.witnesses.push_back(ts);
      out.quotient_orders.push_back(q.n());
    }
  }
  return out;
}

namespace {

struct EngineContext {
  long long p;
  int d, n;
  const Field* fq;  // the spec's field, so element codes stay consistent
  USpace u;
  VSpace v;
  GroupTable h;

  EngineContext(long long p_, int d_, int n_, const Field* fq_,
                const Bounds& b)
      : p(p_),
        d(d_),
        n(n_),
        fq(fq_),
        u{fq_, n_},
        v(p_, d_),
        h(elementary_abelian_group(p_, d_)) {
    if (n_ < 1 || d_ % n_ != 0)
      throw ArgumentOutOfRange("classify: n must divide d");
    if (v.size() > b.max_graph_vertices)
      throw BoundExceeded("classify: p^(2d) exceeds the graph bound");
  }
};

void push_cond(std::vector<std::pair<std::string, std::string>>& conds,
               const std::string& name, const std::string& value) {
  conds.emplace_back(name, value);
}

}  // namespace

ClassificationReport complete_quotients(long long p, int d, int n,
                                        const StabilizerSpec& spec,
                                        const Bounds& bounds) {
  if (n < 1 || d % n != 0)
    throw ArgumentOutOfRange("classify: n must divide d");
  if (!(spec.f->p() == p && spec.f->d() == d / n))
    throw ArgumentOutOfRange("classify: spec field is not F_{p^{d/n}}");
  EngineContext ctx(p, d, n, spec.f, bounds);

  ValidatedSpec vs = validate_spec(spec, size_t(bounds.max_group_size));
  ClassificationReport rep;
  rep.p = p;
  rep.d = d;
  rep.n = n;
  rep.line = spec.line;
  rep.i = vs.i;
  rep.j = vs.j;
  rep.ell = vs.ell;
  rep.m = vs.m;
  for (auto& c : vs.checks) rep.conditions.push_back(c);

  // G0 as autoparatopisms of the Cayley table of H, then its V-action.
  std::vector<Autoparatopism> g0 =
      build_G0(vs, ctx.h, size_t(bounds.max_group_size));
  push_cond(rep.conditions, "g0_order", std::to_string(g0.size()));
  std::vector<Autoparatopism> gens = g0_generators(vs, ctx.h);
  std::vector<PMatrix> mats;
  for (const Autoparatopism& e : gens)
    mats.push_back(induced_linear_action(ctx.v, ctx.h, e));

  Graph gamma = lsg(ctx.h, bounds.max_graph_vertices);
  GraphPredicates gpred = predicates(gamma, /*with_srg=*/false);
  rep.graph_diameter = gpred.diameter.value_or(-1);

  // Arc-transitivity of (Gamma, T G0): orbit of one neighbor of the base
  // cell under G0 must cover the whole neighborhood.
  {
    std::vector<Perm> vperms;
    for (const Autoparatopism& e : gens) vperms.push_back(vertex_perm(ctx.h, e));
    bool at = is_arc_transitive(gamma, vperms, 0);
    push_cond(rep.conditions, "arc_transitive", at ? "true" : "false");
  }

  // Excluded connection-set lines V_0, V_inf, V_-1: tested, logged, never
  // counted as witnesses.
  std::vector<PSubspace> excluded;
  excluded.push_back(subspace_Vc(ctx.v, ctx.u, 0));
  excluded.push_back(subspace_Vinf(ctx.v, ctx.u));
  excluded.push_back(subspace_Vc(ctx.v, ctx.u, ctx.fq->neg(1)));

  QuotientAnalysis qa = analyze_quotients(ctx.v, ctx.u, gamma, mats, excluded);
  rep.orbit_log = qa.orbit_log;
  rep.max_quotient_diameter = qa.max_quotient_diameter;
  for (const auto& ex : qa.excluded_hits)
    push_cond(rep.conditions, "excluded_line_hit",
              ex.first + (ex.second ? " (complete)" : " (incomplete)"));
  push_cond(rep.conditions, "all_candidate_quotients_complete",
            qa.all_candidates_complete ? "true" : "false");

  // Closed-form cross-check: set of c with orbit span exactly V_c must
  // match the case table.
  {
    WitnessCaseSet t3 = witness_case_table(vs);
    std::set<long long> actual;
    for (const auto& [rep_enc, label] : qa.orbit_log) {
      TaggedSubspace ts = orbit_span(ctx.v, ctx.u, rep_enc, mats);
      if (ts.tag == SpanTag::Vc && ts.c != 0) actual.insert(ts.c);
    }
    std::set<long long> expected(t3.c_set.begin(), t3.c_set.end());
    push_cond(rep.conditions, "witness_table_case", t3.case_label);
    push_cond(rep.conditions, "witness_table_agreement",
              actual == expected ? "true" : "MISMATCH");
  }

  rep.witnesses = qa.witnesses;
  rep.quotient_orders = qa.quotient_orders;
  rep.k = int(qa.witnesses.size());
  rep.outcome =
      rep.k > 0 ? Outcome::QuotientComplete : Outcome::VertexQuasiprimitive;

  // Every witness quotient must be complete on exactly p^d vertices.
  long long pd = 1;
  for (int t = 0; t < d; ++t) pd *= p;
  bool all_pd = true;
  for (int q : rep.quotient_orders)
    if (q != pd) all_pd = false;
  push_cond(rep.conditions, "witness_quotients_have_p^d_vertices",
            all_pd ? "true" : "FAILED");
  if (n > 1)
    push_cond(rep.conditions, "v_q_dep_reading",
              "V_q-dep taken as the union of all V_c and V_inf");
  return rep;
}

namespace {

StabilizerSpec plan_spec(const RunPlan& plan, const Field& fq) {
  switch (plan.line) {
    case 1:
      return canonical_line1(fq, plan.ell);
    case 2:
      return canonical_line2(fq, plan.ell, plan.i);
    case 3:
      return canonical_line3(fq, plan.ell);
    case 4:
      return canonical_line4(fq, plan.ell, plan.j);
    default:
      throw SpecLineMismatch("run_plan: canonical families cover lines 1-4");
  }
}

}  // namespace

ClassificationReport run_plan(const RunPlan& plan, const Bounds& bounds,
                              const ModulusConfig* field_config) {
  if (plan.n != 1)
    throw ArgumentOutOfRange("run_plan: canonical families use n = 1");
  std::optional<std::vector<int>> mod;
  if (field_config) mod = field_config->lookup(plan.p, plan.d);
  Field fq = mod ? Field(plan.p, plan.d, *mod, bounds.max_field_order)
                 : Field(plan.p, plan.d, bounds.max_field_order);
  StabilizerSpec spec = plan_spec(plan, fq);
  return complete_quotients(plan.p, plan.d, plan.n, spec, bounds);
}

std::vector<RunPlan> canonical_plans(long long p, int d, const Bounds& bounds) {
  std::vector<RunPlan> plans;
  long long vertices = 1;
  for (int t = 0; t < 2 * d; ++t) {
    vertices *= p;
    if (vertices > bounds.max_graph_vertices) return plans;
  }
  for (int ell : divisors(d)) {
    plans.push_back({p, d, 1, 1, 0, 0, ell});
    plans.push_back({p, d, 1, 3, 0, 0, ell});
  }
  // line 2: g = tau^i with g outside K (ell ndiv i) and g^3 in K (ell | 3i)
  for (int ell : divisors(d))
    for (int i = 1; i <= d; ++i)
      if (i % ell != 0 && (3 * i) % ell == 0)
        plans.push_back({p, d, 1, 2, i, 0, ell});
  // line 4 (odd p): h = omega tau^j with h^2 in K (ell | 2j)
  if (p != 2)
    for (int ell : divisors(d))
      for (int j = 1; j <= d; ++j)
        if ((2 * j) % ell == 0) plans.push_back({p, d, 1, 4, 0, j, ell});
  std::sort(plans.begin(), plans.end(), [](const RunPlan& a, const RunPlan& b) {
    return std::tie(a.p, a.d, a.line, a.ell, a.i, a.j) <
           std::tie(b.p, b.d, b.line, b.ell, b.i, b.j);
  });
  return plans;
}

ExistenceScan verify_existence_condition(long long p, int d, const Bounds& bounds,
                           const std::vector<RunPlan>& extra) {
  ExistenceScan out;
  out.expected = (p % 3 != 2) || (d % 2 == 0) || (d % 3 == 0);
  std::vector<RunPlan> plans;
  plans.push_back({p, d, 1, 1, 0, 0, d});
  if (d % 3 == 0 && d > 1) plans.push_back({p, d, 1, 2, 1, 0, 3});
  plans.insert(plans.end(), extra.begin(), extra.end());
  for (const RunPlan& plan : plans) {
    ClassificationReport r = run_plan(plan, bounds);
    out.runs.push_back(r);
    if (r.outcome == Outcome::QuotientComplete && !out.exists_qc) {
      out.exists_qc = true;
      out.witness = plan;
    }
  }
  out.match = (out.exists_qc == out.expected);
  return out;
}

bool verify_quotient_count_bounds(const std::vector<ClassificationReport>& reports) {
  for (const ClassificationReport& r : reports) {
    if (r.outcome != Outcome::QuotientComplete) continue;
    if (r.p == 3 && !(r.k == 1 || r.k >= 3)) return false;
    if (r.p != 3 && !(r.k >= 2)) return false;
    long long pd = 1;
    for (int t = 0; t < r.d; ++t) pd *= r.p;
    for (int q : r.quotient_orders)
      if (q != pd) return false;
  }
  return true;
}

ScanResult canonical_scan(long long pmax, int dmax, const Bounds& bounds,
                          int parallel) {
  std::vector<RunPlan> plans;
  for (long long p = 2; p <= pmax; ++p) {
    if (!is_prime(p)) continue;
    for (int d = 1; d <= dmax; ++d) {
      std::vector<RunPlan> these = canonical_plans(p, d, bounds);
      plans.insert(plans.end(), these.begin(), these.end());
    }
  }
  ScanResult out;
  out.reports.resize(plans.size());
  if (parallel <= 1) {
    for (size_t k = 0; k < plans.size(); ++k)
      out.reports[k] = run_plan(plans[k], bounds);
  } else {
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    for (int w = 0; w < parallel; ++w)
      workers.emplace_back([&]() {
        for (size_t k = next.fetch_add(1); k < plans.size();
             k = next.fetch_add(1))
          out.reports[k] = run_plan(plans[k], bounds);
      });
    for (auto& t : workers) t.join();
  }
  out.count_bounds_ok = verify_quotient_count_bounds(out.reports);
  return out;
}

CrossCheckResult cross_check_p3d1(const Bounds& bounds) {
  CrossCheckResult out;
  // G = T : G0 at p = 3, d = 1, line 1: 54 autoparatopisms on C_3.
  Field fq(3, 1, bounds.max_field_order);
  GroupTable h = elementary_abelian_group(3, 1);
  StabilizerSpec spec = canonical_line1(fq, 1);
  ValidatedSpec vs = validate_spec(spec);
  std::vector<Autoparatopism> gens = g0_generators(vs, h);
  gens.push_back(translation_add(h, 1, 0));
  gens.push_back(translation_add(h, 0, 1));
  std::vector<Autoparatopism> G = close_group<Autoparatopism,
                                              AutoparatopismHash>(
      gens, Autoparatopism::identity(h.n), size_t(bounds.max_group_size),
      AutoparatopismHash());

  // Conjugacy classes, then normal subgroups as closures of class unions.
  std::vector<int> class_of(G.size(), -1);
  auto index_of = [&](const Autoparatopism& e) {
    for (size_t k = 0; k < G.size(); ++k)
      if (G[k] == e) return int(k);
    throw Error("cross_check: element escaped the closure");
  };
  int n_classes = 0;
  for (size_t k = 0; k < G.size(); ++k) {
    if (class_of[k] >= 0) continue;
    int cls = n_classes++;
    std::vector<int> stack{int(k)};
    class_of[k] = cls;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (const Autoparatopism& g : G) {
        Autoparatopism conj = g.inverse() * G[cur] * g;
        int idx = index_of(conj);
        if (class_of[idx] < 0) {
          class_of[idx] = cls;
          stack.push_back(idx);
        }
      }
    }
  }

  Graph gamma = lsg(h);
  std::vector<Perm> vperm(G.size());
  for (size_t k = 0; k < G.size(); ++k) vperm[k] = vertex_perm(h, G[k]);

  if (n_classes > 24)
    throw BoundExceeded("cross_check: too many conjugacy classes");
  std::set<std::vector<int>> normal_subgroups;  // as sorted element indices
  std::set<std::vector<int>> complete_partitions;
  for (unsigned mask = 0; mask < (1u << n_classes); ++mask) {
    std::vector<Autoparatopism> seed;
    for (size_t k = 0; k < G.size(); ++k)
      if (mask & (1u << class_of[k])) seed.push_back(G[k]);
    if (seed.empty()) continue;
    std::vector<Autoparatopism> sub = close_group<Autoparatopism,
                                                  AutoparatopismHash>(
        seed, Autoparatopism::identity(h.n), G.size(), AutoparatopismHash());
    std::vector<int> ids;
    for (const Autoparatopism& e : sub) ids.push_back(index_of(e));
    std::sort(ids.begin(), ids.end());
    if (!normal_subgroups.insert(ids).second) continue;
    if (ids.size() <= 1 || ids.size() == G.size()) continue;
    // Orbit partition of the vertex set under the subgroup.
    std::vector<int> block_of(gamma.n(), -1);
    int blocks = 0;
    for (int v = 0; v < gamma.n(); ++v) {
      if (block_of[v] >= 0) continue;
      int b = blocks++;
      std::vector<int> stack{v};
      block_of[v] = b;
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int e : ids) {
          int w = vperm[e](cur);
          if (block_of[w] < 0) {
            block_of[w] = b;
            stack.push_back(w);
          }
        }
      }
    }
    if (blocks < 2) continue;  // vertex-transitive subgroup: trivial quotient
    VertexPartition part;
    part.block_of = block_of;
    part.n_blocks = blocks;
    Graph q = quotient(gamma, part);
    if (predicates(q).complete) complete_partitions.insert(block_of);
  }
  out.n_normal_subgroups = int(normal_subgroups.size());
  out.n_complete_partitions = int(complete_partitions.size());

  // Subspace method on the same pair.
  ClassificationReport rep = complete_quotients(3, 1, 1, spec, bounds);
  std::set<std::vector<int>> subspace_partitions;
  VSpace v(3, 1);
  for (const TaggedSubspace& w : rep.witnesses) {
    std::vector<int> block_of(v.size(), -1);
    std::map<long long, int> rep_to_block;
    for (long long venc = 0; venc < v.size(); ++venc) {
      std::vector<int> x = v.decode(venc);
      for (const auto& r : w.space.basis) {
        int piv = -1;
        for (int c = 0; c < v.dim(); ++c)
          if (r[c] != 0) {
            piv = c;
            break;
          }
        if (x[piv] != 0) {
          long long fct = x[piv];
          for (int c = 0; c < v.dim(); ++c)
            x[c] = int(((x[c] - fct * r[c]) % v.p + v.p) % v.p);
        }
      }
      long long rp = v.encode(x);
      auto it = rep_to_block.find(rp);
      if (it == rep_to_block.end())
        it = rep_to_block.emplace(rp, int(rep_to_block.size())).first;
      block_of[venc] = it->second;
    }
    // Normalize block ids to first-occurrence order for set comparison.
    std::vector<int> norm(block_of.size(), -1);
    std::map<int, int> remap;
    for (size_t t = 0; t < block_of.size(); ++t) {
      auto it = remap.find(block_of[t]);
      if (it == remap.end())
        it = remap.emplace(block_of[t], int(remap.size())).first;
      norm[t] = it->second;
    }
    subspace_partitions.insert(norm);
  }
  // Normalize the enumeration partitions the same way.
  std::set<std::vector<int>> enum_norm;
  for (const auto& part : complete_partitions) {
    std::vector<int> norm(part.size(), -1);
    std::map<int, int> remap;
    for (size_t t = 0; t < part.size(); ++t) {
      auto it = remap.find(part[t]);
      if (it == remap.end())
        it = remap.emplace(part[t], int(remap.size())).first;
      norm[t] = it->second;
    }
    enum_norm.insert(norm);
  }
  out.matches_subspace_method = (enum_norm == subspace_partitions);
  return out;
}

}  // namespace lsgq
