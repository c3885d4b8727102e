#ifndef LSGQ_CLASSIFY_HPP
#define LSGQ_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsgq/graph.hpp"
#include "lsgq/stabilizer.hpp"
#include "lsgq/subspace.hpp"

namespace lsgq {

struct Bounds {
  long long max_field_order = 10000;
  long long max_graph_vertices = 10000;
  long long max_group_size = 1000000;

  /// Environment overrides: LSGQ_MAX_FIELD_ORDER, LSGQ_MAX_GRAPH_VERTICES,
  /// LSGQ_MAX_GROUP_SIZE.
  static Bounds from_env();
};

/// Matrix of the V-action of a base-cell stabilizer element, read off the
/// images of basis triples (a, b, a+b); verified against the element on all
/// of V (NotLinear on failure, which signals a construction bug).
PMatrix induced_linear_action(const VSpace& v, const GroupTable& h,
                              const Autoparatopism& e);

/// Echelon span of the orbit of vec under matrix generators, tagged against
/// the named line subspaces.
TaggedSubspace orbit_span(const VSpace& v, const USpace& u, long long vec_enc,
                          const std::vector<PMatrix>& gens);

/// The set of c for which the orbit of (a, ca) spans exactly V_c, by the
/// closed-form case table for the spec's line, using (p, d, i, j, l,
/// m = gcd(i, l)).  Exponent conditions are read intrinsically over F_q.
struct WitnessCaseSet {
  std::vector<long long> c_set;  // F_q codes, ascending
  std::string case_label;
};
WitnessCaseSet witness_case_table(const ValidatedSpec& vs);

/// Everything the quotient engine finds for one affine pair (Gamma, G).
struct QuotientAnalysis {
  std::vector<TaggedSubspace> invariant;  // proper nonzero, join-closed
  std::vector<TaggedSubspace> witnesses;  // complete nontrivial, not excluded
  std::vector<int> quotient_orders;       // aligned with witnesses
  std::vector<std::pair<std::string, bool>> excluded_hits;  // label, complete?
  std::vector<std::pair<long long, std::string>> orbit_log;  // rep -> tag
  bool all_candidates_complete = true;
  std::optional<int> max_quotient_diameter;  // over all candidate quotients
};

/// Orbit spans + join closure + per-subspace coset quotients of gamma.
/// `excluded` subspaces are still quotiented and logged but never counted
/// as witnesses.
QuotientAnalysis analyze_quotients(const VSpace& v, const USpace& u,
                                   const Graph& gamma,
                                   const std::vector<PMatrix>& gens,
                                   const std::vector<PSubspace>& excluded);

enum class Outcome { QuotientComplete, VertexQuasiprimitive };

struct ClassificationReport {
  long long p = 0;
  int d = 0, n = 1, line = 1;
  int i = 0, j = 0, ell = 0, m = 0;  // 0 = not applicable
  Outcome outcome = Outcome::VertexQuasiprimitive;
  int k = 0;
  std::vector<TaggedSubspace> witnesses;
  std::vector<int> quotient_orders;
  std::vector<std::pair<std::string, std::string>> conditions;
  std::vector<std::pair<long long, std::string>> orbit_log;
  int graph_diameter = 0;
  std::optional<int> max_quotient_diameter;
};

/// The classification engine: builds Gamma = lsg(H) and G = T : G0 for
/// H = C_p^d viewed as U = F_q^n, enumerates all orbit spans in V = U + U,
/// quotients Gamma by the cosets of every proper invariant subspace, and
/// counts the nontrivial complete quotients.  The connection-set lines V_0,
/// V_inf, V_-1 are never counted as witnesses (they are tested and logged
/// if they ever arise).
ClassificationReport complete_quotients(long long p, int d, int n,
                                        const StabilizerSpec& spec,
                                        const Bounds& bounds = Bounds());

/// Canonical-family run: materializes the fields and the spec for one
/// parameter tuple.  line 1/3: K = <F_q^#, tau^ell>; line 2: g = tau^i;
/// line 4: K = <squares, tau^ell>, h = omega tau^j.
struct RunPlan {
  long long p = 0;
  int d = 0, n = 1, line = 1;
  int i = 0, j = 0, ell = 0;
};
ClassificationReport run_plan(const RunPlan& plan,
                              const Bounds& bounds = Bounds(),
                              const ModulusConfig* field_config = nullptr);

/// All canonical-family plans for one (p, d) with p^(2d) within the graph
/// bound: line 1 and 3 over ell | d; line 2 over valid (i, ell); line 4
/// (p odd) over ell | d and j in [1, d] with ell | 2j.
std::vector<RunPlan> canonical_plans(long long p, int d, const Bounds& bounds);

struct ExistenceScan {
  bool exists_qc = false;
  bool expected = false;  // p != 2 mod 3, or d even, or 3 | d
  bool match = false;
  std::optional<RunPlan> witness;
  std::vector<ClassificationReport> runs;
};
/// Scans the constructive families (line 1 with ell = d; line 2 with i = 1,
/// ell = 3 when 3 | d) plus any extra plans, and compares against the
/// closed-form condition.
ExistenceScan verify_existence_condition(long long p, int d, const Bounds& bounds = Bounds(),
                           const std::vector<RunPlan>& extra = {});

/// Every quotient-complete report must satisfy k = 1 or k >= 3 when p = 3,
/// k >= 2 when p != 3, and all quotient orders must equal p^d.
bool verify_quotient_count_bounds(const std::vector<ClassificationReport>& reports);

struct ScanResult {
  std::vector<ClassificationReport> reports;
  bool count_bounds_ok = false;
};
/// Deterministic scan over all canonical plans with p <= pmax, d <= dmax;
/// `parallel` > 1 distributes runs over threads, results merged in
/// parameter order.
ScanResult canonical_scan(long long pmax, int dmax,
                          const Bounds& bounds = Bounds(), int parallel = 1);

struct CrossCheckResult {
  int n_normal_subgroups = 0;
  int n_complete_partitions = 0;
  bool matches_subspace_method = false;
};
/// Exhaustive normal-subgroup enumeration of G for p = 3, d = 1, line 1
/// (|G| = 54): every nontrivial complete normal quotient found by subgroup
/// enumeration must match the subspace method's.
CrossCheckResult cross_check_p3d1(const Bounds& bounds = Bounds());

}  // namespace lsgq

#endif
