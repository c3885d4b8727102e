#include "lsgq/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "lsgq/errors.hpp"

namespace lsgq {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  rows_.assign(size_t(n) * words_, 0);
}

long long Graph::edge_count() const {
  long long total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw Error("Graph::add_edge: loop");
  rows_[size_t(u) * words_ + (v >> 6)] |= uint64_t(1) << (v & 63);
  rows_[size_t(v) * words_ + (u >> 6)] |= uint64_t(1) << (u & 63);
}

int Graph::degree(int v) const {
  int deg = 0;
  for (int w = 0; w < words_; ++w)
    deg += __builtin_popcountll(rows_[size_t(v) * words_ + w]);
  return deg;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  const uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    uint64_t bits = r[w];
    while (bits) {
      int b = __builtin_ctzll(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

GraphPredicates predicates(const Graph& g, bool with_srg) {
  GraphPredicates out;
  const int n = g.n();
  if (n == 0) return out;

  // Word-level BFS from every source; distances by frontier levels.
  const int words = g.words();
  std::vector<uint64_t> visited(words), frontier(words), next(words);
  auto bfs_ecc = [&](int s, int* reached) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    visited[s >> 6] = frontier[s >> 6] = uint64_t(1) << (s & 63);
    int level = 0, count = 1;
    while (true) {
      std::fill(next.begin(), next.end(), 0);
      bool any = false;
      for (int w = 0; w < words; ++w) {
        uint64_t bits = frontier[w];
        while (bits) {
          int v = w * 64 + __builtin_ctzll(bits);
          bits &= bits - 1;
          const uint64_t* row = g.row(v);
          for (int t = 0; t < words; ++t) next[t] |= row[t];
        }
      }
      for (int t = 0; t < words; ++t) {
        next[t] &= ~visited[t];
        if (next[t]) any = true;
        visited[t] |= next[t];
        count += __builtin_popcountll(next[t]);
      }
      if (!any) break;
      ++level;
      std::swap(frontier, next);
    }
    *reached = count;
    return level;
  };

  int reached = 0;
  int ecc0 = bfs_ecc(0, &reached);
  out.connected = (reached == n);
  if (out.connected) {
    int diam = ecc0;
    for (int s = 1; s < n; ++s) {
      int r = 0;
      diam = std::max(diam, bfs_ecc(s, &r));
    }
    out.diameter = diam;
  }
  out.complete = true;
  for (int v = 0; v < n && out.complete; ++v)
    if (g.degree(v) != n - 1) out.complete = false;

  // Strong regularity: regular, neither complete nor empty, with constant
  // common-neighbor counts on adjacent and non-adjacent pairs.
  int k = g.degree(0);
  bool regular = true;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != k) {
      regular = false;
      break;
    }
  if (with_srg && regular && k > 0 && !out.complete) {
    int lambda = -1, mu = -1;
    bool srg = true;
    for (int u = 0; u < n && srg; ++u)
      for (int v = u + 1; v < n && srg; ++v) {
        int common = 0;
        const uint64_t* ru = g.row(u);
        const uint64_t* rv = g.row(v);
        for (int w = 0; w < words; ++w)
          common += __builtin_popcountll(ru[w] & rv[w]);
        if (g.adjacent(u, v)) {
          if (lambda < 0) lambda = common;
          if (common != lambda) srg = false;
        } else {
          if (mu < 0) mu = common;
          if (common != mu) srg = false;
        }
      }
    if (srg && lambda >= 0 && mu >= 0)
      out.srg_params = std::array<int, 4>{n, k, lambda, mu};
  }
  return out;
}

VertexPartition VertexPartition::from_blocks(
    int n_vertices, const std::vector<std::vector<int>>& bl) {
  VertexPartition p;
  p.block_of.assign(n_vertices, -1);
  p.n_blocks = int(bl.size());
  for (int b = 0; b < p.n_blocks; ++b)
    for (int v : bl[b]) {
      if (v < 0 || v >= n_vertices || p.block_of[v] != -1)
        throw InvalidPartition("blocks must be disjoint and in range");
      p.block_of[v] = b;
    }
  p.validate(n_vertices);
  return p;
}

std::vector<std::vector<int>> VertexPartition::blocks() const {
  std::vector<std::vector<int>> out(n_blocks);
  for (int v = 0; v < int(block_of.size()); ++v) out[block_of[v]].push_back(v);
  return out;
}

void VertexPartition::validate(int n_vertices) const {
  if (int(block_of.size()) != n_vertices)
    throw InvalidPartition("partition covers a different vertex count");
  for (int v = 0; v < n_vertices; ++v)
    if (block_of[v] < 0 || block_of[v] >= n_blocks)
      throw InvalidPartition("vertex without a block");
}

Graph lsg(const GroupTable& h, long long max_vertices) {
  const long long n = h.n;
  if (n * n > max_vertices)
    throw BoundExceeded("lsg: |H|^2 exceeds the graph bound");
  Graph g(int(n * n));
  auto idx = [&](int a, int b) { return int(a * n + b); };
  // Rows and columns.
  for (int a = 0; a < n; ++a)
    for (int b1 = 0; b1 < n; ++b1)
      for (int b2 = b1 + 1; b2 < n; ++b2) {
        g.add_edge(idx(a, b1), idx(a, b2));
        g.add_edge(idx(b1, a), idx(b2, a));
      }
  // Symbols: cells with equal product form a clique.
  std::vector<std::vector<int>> symbol_cells(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) symbol_cells[h.mul(a, b)].push_back(idx(a, b));
  for (const auto& cells : symbol_cells)
    for (size_t s = 0; s < cells.size(); ++s)
      for (size_t t = s + 1; t < cells.size(); ++t)
        g.add_edge(cells[s], cells[t]);
  return g;
}

Graph cayley(const GroupTable& v, const std::vector<int>& s,
             long long max_vertices) {
  if (v.n > max_vertices) throw BoundExceeded("cayley: vertex bound");
  std::vector<char> in_s(v.n, 0);
  for (int x : s) {
    if (x == 0) throw IdentityInS("cayley: identity in connection set");
    in_s[x] = 1;
  }
  for (int x : s)
    if (!in_s[v.inv(x)])
      throw AsymmetricConnectionSet(
          "cayley: connection set not closed under inversion");
  Graph g(v.n);
  for (int a = 0; a < v.n; ++a)
    for (int x : s) {
      int b = v.mul(a, x);  // s^-1 t = x with t = a x
      if (a < b) g.add_edge(a, b);
    }
  return g;
}

Graph quotient(const Graph& g, const VertexPartition& part) {
  part.validate(g.n());
  Graph q(part.n_blocks);
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      int bu = part.block_of[u], bv = part.block_of[v];
      if (bu != bv && !q.adjacent(bu, bv)) q.add_edge(bu, bv);
    }
  return q;
}

Perm vertex_perm(const GroupTable& h, const Autoparatopism& e) {
  const int n = h.n;
  Perm p;
  p.img.resize(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> img = e.apply({a, b, h.mul(a, b)});
      if (h.mul(img[0], img[1]) != img[2])
        throw Error("vertex_perm: element does not preserve the Cayley table");
      p.img[size_t(a) * n + b] = int32_t(img[0] * n + img[1]);
    }
  return p;
}

bool is_arc_transitive(const Graph& g, const std::vector<Perm>& stab_gens,
                       int base_vertex) {
  for (const Perm& s : stab_gens) {
    if (s.degree() != g.n())
      throw NotAStabilizer("stabilizer generator degree mismatch");
    if (s(base_vertex) != base_vertex)
      throw NotAStabilizer("generator moves the base vertex");
  }
  // Adjacency preservation per generator.
  for (const Perm& s : stab_gens)
    for (int u = 0; u < g.n(); ++u)
      for (int v : g.neighbors(u)) {
        if (v < u) continue;
        if (!g.adjacent(s(u), s(v)))
          throw NotAStabilizer("generator breaks adjacency");
      }
  std::vector<int> nb = g.neighbors(base_vertex);
  if (nb.empty()) return true;
  std::vector<int> orb = orbit_ints(nb[0], stab_gens);
  if (orb.size() != nb.size()) return false;
  std::vector<char> in_nb(g.n(), 0);
  for (int v : nb) in_nb[v] = 1;
  for (int v : orb)
    if (!in_nb[v]) return false;
  return true;
}

bool lsg_arc_transitive_full(const GroupTable& h) {
  Graph g = lsg(h);
  auto [x, y] = make_x_y(h);
  std::vector<Perm> gens{vertex_perm(h, x), vertex_perm(h, y)};
  for (const Perm& a : automorphism_group(h))
    gens.push_back(vertex_perm(h, diagonal(a)));
  return is_arc_transitive(g, gens, 0);
}

bool is_isomorphism(const Graph& g1, const Graph& g2,
                    const std::vector<int>& map) {
  if (g1.n() != g2.n() || int(map.size()) != g1.n()) return false;
  std::vector<char> used(g2.n(), 0);
  for (int v : map) {
    if (v < 0 || v >= g2.n() || used[v]) return false;
    used[v] = 1;
  }
  for (int u = 0; u < g1.n(); ++u)
    for (int v = u + 1; v < g1.n(); ++v)
      if (g1.adjacent(u, v) != g2.adjacent(map[u], map[v])) return false;
  return true;
}

namespace {

std::vector<long long> vertex_invariants(const Graph& g) {
  // degree plus a hash of the sorted neighbor-degree multiset
  const int n = g.n();
  std::vector<long long> inv(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    long long h = g.degree(v);
    for (int x : nd) h = h * 1000003 + x;
    inv[v] = h;
  }
  return inv;
}

struct IsoSearch {
  const Graph& g1;
  const Graph& g2;
  std::vector<long long> inv1, inv2;
  std::vector<int> order;     // g1 vertices in assignment order
  std::vector<int> map;       // g1 -> g2 or -1
  std::vector<char> used;     // g2 vertex used
  long long budget = 20000000;

  bool consistent(int u, int v) const {
    if (inv1[u] != inv2[v]) return false;
    for (int w = 0; w < g1.n(); ++w) {
      if (map[w] < 0) continue;
      if (g1.adjacent(u, w) != g2.adjacent(v, map[w])) return false;
    }
    return true;
  }

  bool rec(size_t pos) {
    if (--budget < 0) throw BoundExceeded("isomorphic: search budget");
    if (pos == order.size()) return true;
    int u = order[pos];
    for (int v = 0; v < g2.n(); ++v) {
      if (used[v] || !consistent(u, v)) continue;
      map[u] = v;
      used[v] = 1;
      if (rec(pos + 1)) return true;
      map[u] = -1;
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> isomorphic(const Graph& g1, const Graph& g2,
                                           long long max_vertices) {
  if (g1.n() > max_vertices || g2.n() > max_vertices)
    throw BoundExceeded("isomorphic: vertex bound");
  if (g1.n() != g2.n() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  std::vector<long long> inv1 = vertex_invariants(g1);
  std::vector<long long> inv2 = vertex_invariants(g2);
  {
    std::vector<long long> a = inv1, b = inv2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  IsoSearch s{g1, g2, inv1, inv2, {}, {}, {}};
  s.map.assign(g1.n(), -1);
  s.used.assign(g2.n(), 0);
  // Connectivity-first order: next vertex with most already-ordered
  // neighbors, ties by higher degree.
  std::vector<char> placed(g1.n(), 0);
  for (int step = 0; step < g1.n(); ++step) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < g1.n(); ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int w : g1.neighbors(v)) links += placed[w];
      if (links > best_links ||
          (links == best_links && g1.degree(v) > best_deg)) {
        best = v;
        best_links = links;
        best_deg = g1.degree(v);
      }
    }
    placed[best] = 1;
    s.order.push_back(best);
  }
  if (s.rec(0)) {
    if (!is_isomorphism(g1, g2, s.map))
      throw Error("isomorphic: internal certificate check failed");
    return s.map;
  }
  return std::nullopt;
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) os << u << " " << v << "\n";
  return os.str();
}

}  // namespace lsgq
