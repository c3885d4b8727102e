#include "lsgq/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "lsgq/errors.hpp"
#include "lsgq/intutil.hpp"

namespace lsgq {

std::pair<long long, int> prime_power(long long q) {
  if (q < 2) throw ArgumentOutOfRange("prime_power: q >= 2 required");
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    int d = 0;
    long long r = q;
    while (r % p == 0) {
      r /= p;
      ++d;
    }
    if (r != 1) throw ArgumentOutOfRange("prime_power: q is not a prime power");
    return {p, d};
  }
  return {q, 1};  // q itself prime
}

namespace {

int count_complete_named_quotients(ExampleFamily& fam,
                                   const std::vector<VertexPartition>& parts) {
  int k = 0;
  for (const VertexPartition& part : parts) {
    Graph q = quotient(fam.graph, part);
    GraphPredicates pr = predicates(q);
    if (pr.complete && q.n() >= 2) {
      ++k;
      fam.quotient_orders.push_back(q.n());
      fam.quotient_graphs.push_back(q);
    }
  }
  return k;
}

}  // namespace

ExampleFamily lexicographic(int m, int n, const Bounds& bounds) {
  if (m < 2 || n < 1)
    throw ArgumentOutOfRange("lexicographic: m >= 2 and n >= 1 required");
  if (1LL * m * n > bounds.max_graph_vertices)
    throw BoundExceeded("lexicographic: graph bound");
  ExampleFamily fam;
  fam.kind = FamilyKind::Lexicographic;
  fam.name = "lexicographic";
  fam.params = {m, n};
  fam.graph = Graph(m * n);
  auto idx = [&](int i, int j) { return i * n + j; };
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = i1 + 1; i2 < m; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
          fam.graph.add_edge(idx(i1, j1), idx(i2, j2));
  fam.expected_k = 1;
  std::vector<std::vector<int>> blocks(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) blocks[i].push_back(idx(i, j));
  std::vector<VertexPartition> parts{
      VertexPartition::from_blocks(m * n, blocks)};
  fam.computed_k = count_complete_named_quotients(fam, parts);
  fam.witness_labels = {"first-coordinate blocks"};
  return fam;
}

ExampleFamily direct_product(int m, int n, const Bounds& bounds) {
  if (m < 3 || n < 3)
    throw ArgumentOutOfRange(
        "direct_product: m, n >= 3 required (K_2 x K_2 is disconnected)");
  if (1LL * m * n > bounds.max_graph_vertices)
    throw BoundExceeded("direct_product: graph bound");
  ExampleFamily fam;
  fam.kind = FamilyKind::DirectProduct;
  fam.name = "direct-product";
  fam.params = {m, n};
  fam.graph = Graph(m * n);
  auto idx = [&](int i, int j) { return i * n + j; };
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
          if (i1 != i2 && j1 != j2 && idx(i1, j1) < idx(i2, j2))
            fam.graph.add_edge(idx(i1, j1), idx(i2, j2));
  fam.expected_k = 2;
  std::vector<std::vector<int>> rows(m), cols(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      rows[i].push_back(idx(i, j));
      cols[j].push_back(idx(i, j));
    }
  std::vector<VertexPartition> parts{
      VertexPartition::from_blocks(m * n, rows),
      VertexPartition::from_blocks(m * n, cols)};
  fam.computed_k = count_complete_named_quotients(fam, parts);
  fam.witness_labels = {"first-coordinate blocks", "second-coordinate blocks"};
  return fam;
}

namespace {

/// Shared tail for the two Cayley families: run the subspace engine over
/// the given F_q 2x2 matrix generators and collect witnesses.
void run_affine_engine(ExampleFamily& fam, const Field& fq,
                       const std::vector<std::array<long long, 4>>& mat_gens,
                       const Bounds& bounds) {
  const long long p = fq.p();
  const int dq = fq.d();
  VSpace v(p, dq);
  USpace u{&fq, 1};
  std::vector<PMatrix> mats;
  for (const auto& mg : mat_gens) {
    // (a, b) -> (a m00 + b m10, a m01 + b m11): build the GF(p) matrix from
    // images of basis pairs.
    PMatrix pm;
    pm.p = p;
    pm.dim = v.dim();
    pm.m.assign(pm.dim * pm.dim, 0);
    for (int t = 0; t < pm.dim; ++t) {
      long long unit = 1;
      for (int k = 0; k < (t < dq ? t : t - dq); ++k) unit *= p;
      long long a = t < dq ? unit : 0;
      long long b = t < dq ? 0 : unit;
      long long ia = fq.add(fq.mul(a, mg[0]), fq.mul(b, mg[2]));
      long long ib = fq.add(fq.mul(a, mg[1]), fq.mul(b, mg[3]));
      std::vector<int> row = v.decode(v.enc_pair(ia, ib));
      for (int c = 0; c < pm.dim; ++c) pm.m[t * pm.dim + c] = row[c];
    }
    mats.push_back(pm);
  }
  (void)bounds;
  QuotientAnalysis qa = analyze_quotients(v, u, fam.graph, mats, {});
  fam.computed_k = int(qa.witnesses.size());
  fam.quotient_orders = qa.quotient_orders;
  for (const TaggedSubspace& w : qa.witnesses)
    fam.witness_labels.push_back(w.label());
  for (const TaggedSubspace& w : qa.witnesses) {
    // rebuild the coset quotient for callers that want the graphs
    std::map<long long, int> rep_to_block;
    std::vector<int> block_of(v.size(), -1);
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
      long long rep = v.encode(x);
      auto it = rep_to_block.find(rep);
      if (it == rep_to_block.end())
        it = rep_to_block.emplace(rep, int(rep_to_block.size())).first;
      block_of[venc] = it->second;
    }
    VertexPartition part;
    part.block_of = block_of;
    part.n_blocks = int(rep_to_block.size());
    fam.quotient_graphs.push_back(quotient(fam.graph, part));
  }
}

Graph cayley_on_v(const VSpace& v, const std::vector<long long>& s,
                  const Bounds& bounds) {
  if (v.size() > bounds.max_graph_vertices)
    throw BoundExceeded("cayley: graph bound");
  Graph g(int(v.size()));
  // difference structure over the additive group of V
  for (long long venc = 0; venc < v.size(); ++venc) {
    std::vector<int> x = v.decode(venc);
    for (long long se : s) {
      std::vector<int> y = v.decode(se);
      std::vector<int> sum(v.dim());
      for (int c = 0; c < v.dim(); ++c) sum[c] = int((x[c] + y[c]) % v.p);
      long long w = v.encode(sum);
      if (venc < w) g.add_edge(int(venc), int(w));
    }
  }
  return g;
}

}  // namespace

ExampleFamily diagonal_cayley(long long q, const Bounds& bounds) {
  auto [p, dq] = prime_power(q);
  if (p == 2 || q < 5)
    throw ArgumentOutOfRange(
        "diagonal_cayley: q must be an odd prime power >= 5 (smaller or even "
        "q gives a disconnected or degenerate graph)");
  if (q * q > bounds.max_graph_vertices)
    throw BoundExceeded("diagonal_cayley: graph bound");
  ExampleFamily fam;
  fam.kind = FamilyKind::DiagonalCayley;
  fam.name = "diagonal-cayley";
  fam.params = {q};

  Field fq(p, dq, bounds.max_field_order);
  VSpace v(p, dq);
  // S = orbit of (1,1) under {diag(a,b) : ab a nonzero square}; generated by
  // diag(w, w) and diag(w^2, 1).
  const long long w = fq.omega_code();
  const long long w2 = fq.mul(w, w);
  std::set<long long> s;
  std::vector<long long> stack{v.enc_pair(1, 1)};
  s.insert(v.enc_pair(1, 1));
  while (!stack.empty()) {
    long long cur = stack.back();
    stack.pop_back();
    long long a = v.a_of(cur), b = v.b_of(cur);
    for (int g = 0; g < 2; ++g) {
      long long na = g == 0 ? fq.mul(a, w) : fq.mul(a, w2);
      long long nb = g == 0 ? fq.mul(b, w) : b;
      long long nxt = v.enc_pair(na, nb);
      if (s.insert(nxt).second) stack.push_back(nxt);
    }
  }
  fam.graph = cayley_on_v(v, std::vector<long long>(s.begin(), s.end()),
                          bounds);
  fam.expected_k = 2;
  fam.notes = "S has (q-1)^2/2 elements";
  run_affine_engine(fam, fq,
                    {{w, 0, 0, w}, {w2, 0, 0, 1}}, bounds);
  return fam;
}

ExampleFamily lsg_example(long long q, const Bounds& bounds) {
  auto [p, dq] = prime_power(q);
  if (q * q > bounds.max_graph_vertices)
    throw BoundExceeded("lsg_example: graph bound");
  ExampleFamily fam;
  fam.kind = FamilyKind::Lsg;
  fam.name = "lsg-example";
  fam.params = {q};

  Field fq(p, dq, bounds.max_field_order);
  VSpace v(p, dq);
  // S = orbit of (1, 0) under <scalars, [[1,-1],[1,0]]>
  //   = {(a, 0), (0, a), (a, -a) : a != 0}.
  std::set<long long> s;
  for (long long a = 1; a < q; ++a) {
    s.insert(v.enc_pair(a, 0));
    s.insert(v.enc_pair(0, a));
    s.insert(v.enc_pair(a, fq.neg(a)));
  }
  fam.graph = cayley_on_v(v, std::vector<long long>(s.begin(), s.end()),
                          bounds);
  // The subspaces W = {(a, ca)} that can occur are written with a ranging
  // over nonzero elements in the source description; as subspaces they of
  // course include 0.
  fam.expected_k = (q % 3 == 0) ? 1 : (q % 3 == 1 ? 2 : 0);
  const long long w = fq.omega_code();
  // M = [[1, -1], [1, 0]] row action; scalars = w I.
  run_affine_engine(fam, fq,
                    {{w, 0, 0, w}, {1, fq.neg(1), 1, 0}}, bounds);
  return fam;
}

}  // namespace lsgq
