#ifndef LSGQ_GRAPH_HPP
#define LSGQ_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsgq/autopara.hpp"
#include "lsgq/grouptable.hpp"
#include "lsgq/perm.hpp"

namespace lsgq {

/// Finite simple graph with packed-bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  long long edge_count() const;
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (rows_[size_t(u) * words_ + size_t(v >> 6)] >> (v & 63)) & 1;
  }
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  const uint64_t* row(int v) const { return rows_.data() + size_t(v) * words_; }
  int words() const { return words_; }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> rows_;
};

struct GraphPredicates {
  bool connected = false;
  std::optional<int> diameter;  // absent when disconnected
  bool complete = false;
  /// (v, k, lambda, mu) when strongly regular; complete and empty graphs
  /// are not reported as strongly regular.
  std::optional<std::array<int, 4>> srg_params;
};

/// with_srg = false skips the strongly-regular parameter scan (quadratic in
/// the vertex count), leaving srg_params absent.
GraphPredicates predicates(const Graph& g, bool with_srg = true);

struct VertexPartition {
  std::vector<int> block_of;  // vertex -> block id in [0, n_blocks)
  int n_blocks = 0;

  static VertexPartition from_blocks(int n_vertices,
                                     const std::vector<std::vector<int>>& bl);
  std::vector<std::vector<int>> blocks() const;
  void validate(int n_vertices) const;
};

/// Latin square graph of the Cayley table of h: vertices are the cells
/// (a, b, ab) indexed a*|H| + b; edges join cells agreeing in exactly one
/// coordinate (same row, same column, or same symbol).
Graph lsg(const GroupTable& h, long long max_vertices = 10000);

/// Cayley graph on the group `v` with connection set s: edges {s,t} with
/// s^-1 t in S.  S must exclude the identity and be closed under inversion.
Graph cayley(const GroupTable& v, const std::vector<int>& s,
             long long max_vertices = 10000);

/// Quotient: blocks adjacent when any cross-block edge exists; intra-block
/// edges are dropped.
Graph quotient(const Graph& g, const VertexPartition& part);

/// Vertex permutation induced by an autoparatopism on the cells of the
/// Cayley table of h.
Perm vertex_perm(const GroupTable& h, const Autoparatopism& e);

/// Orbit test on the neighborhood of base_vertex: with the graph vertex-
/// transitive under its ambient group, the graph is arc-transitive iff the
/// stabilizer orbit of one neighbor covers the whole neighborhood.  Each
/// generator must fix base_vertex and preserve adjacency (NotAStabilizer).
bool is_arc_transitive(const Graph& g, const std::vector<Perm>& stab_gens,
                       int base_vertex);

/// Arc-transitivity of lsg(h) under the full autoparatopism stabilizer
/// <x, y, Aut(H)> of the cell (0,0,0).
bool lsg_arc_transitive_full(const GroupTable& h);

/// Backtracking isomorphism search with degree / neighbor-degree-multiset
/// invariants.  Returns a certified vertex bijection or nothing.
std::optional<std::vector<int>> isomorphic(const Graph& g1, const Graph& g2,
                                           long long max_vertices = 2500);

/// True when `map` is an isomorphism from g1 to g2.
bool is_isomorphism(const Graph& g1, const Graph& g2,
                    const std::vector<int>& map);

std::string to_dot(const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace lsgq

#endif
