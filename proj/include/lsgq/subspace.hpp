#ifndef LSGQ_SUBSPACE_HPP
#define LSGQ_SUBSPACE_HPP

#include <string>
#include <vector>

#include "lsgq/semilinear.hpp"

namespace lsgq {

/// V = U + U over GF(p), where U has GF(p)-dimension d.  A vector is the
/// pair (a, b) of H-encoded elements; its integer encoding is a * p^d + b,
/// so the vertex index of the cell (a, b, a+b) and the V-encoding agree.
/// Coordinates: x[0..d) are the base-p digits of a, x[d..2d) those of b.
struct VSpace {
  long long p = 0;
  int d = 0;           // GF(p)-dimension of U
  long long usize = 0; // p^d

  VSpace() = default;
  VSpace(long long p_, int d_);

  int dim() const { return 2 * d; }
  long long size() const { return usize * usize; }

  long long enc_pair(long long a, long long b) const { return a * usize + b; }
  long long a_of(long long v) const { return v / usize; }
  long long b_of(long long v) const { return v % usize; }

  std::vector<int> decode(long long v) const;
  long long encode(const std::vector<int>& x) const;
};

/// Square matrix over GF(p) acting on row vectors: y = x M.
struct PMatrix {
  long long p = 0;
  int dim = 0;
  std::vector<int> m;  // row-major

  static PMatrix identity(long long p, int dim);
  int at(int r, int c) const { return m[r * dim + c]; }
  std::vector<int> apply(const std::vector<int>& x) const;
  long long apply_enc(const VSpace& v, long long enc) const;
  PMatrix operator*(const PMatrix& o) const;  // left-to-right
  bool operator==(const PMatrix& o) const { return m == o.m; }
};

/// Subspace of GF(p)^dim in reduced row echelon form (unique representative
/// per subspace; rows ordered by pivot).
struct PSubspace {
  long long p = 0;
  int ambient = 0;
  std::vector<std::vector<int>> basis;

  static PSubspace zero(long long p, int ambient);
  static PSubspace span(long long p, int ambient,
                        const std::vector<std::vector<int>>& vectors);
  int dim() const { return int(basis.size()); }
  bool contains(const std::vector<int>& x) const;
  bool contains_subspace(const PSubspace& o) const;
  PSubspace join(const PSubspace& o) const;
  bool operator==(const PSubspace& o) const { return basis == o.basis; }
  bool operator<(const PSubspace& o) const;  // deterministic ordering

  /// Basis rows as V-encodings (for reports).
  std::vector<long long> encoded_rows(const VSpace& v) const;
};

/// The line subspaces of V: V_c = {(u, cu)} for c in F_q (V_0 when c = 0)
/// and V_inf = {(0, u)}.  u spans U = F_q^n with the same integer encoding
/// as VSpace's halves.
PSubspace subspace_Vc(const VSpace& v, const USpace& u, long long c_code);
PSubspace subspace_Vinf(const VSpace& v, const USpace& u);

enum class SpanTag { Zero, Vc, Vinf, Full, Other };

struct TaggedSubspace {
  PSubspace space;
  SpanTag tag = SpanTag::Other;
  long long c = -1;  // F_q code when tag == Vc
  std::string label() const;
};

/// Identify a subspace against the named lines.
TaggedSubspace tag_subspace(const VSpace& v, const USpace& u,
                            const PSubspace& s);

}  // namespace lsgq

#endif
