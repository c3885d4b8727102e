#ifndef LSGQ_SEMILINEAR_HPP
#define LSGQ_SEMILINEAR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lsgq/ffield.hpp"
#include "lsgq/perm.hpp"

namespace lsgq {

/// U = F_q^n with vectors encoded as integers: enc(u) = sum enc(u_k) q^k.
/// Exposes the GF(p)-structure of U (dimension n * [F_q : F_p]).
struct USpace {
  const Field* f = nullptr;
  int n = 1;

  long long q() const { return f->order(); }
  long long size() const {
    long long s = 1;
    for (int k = 0; k < n; ++k) s *= f->order();
    return s;
  }
  int dim_p() const { return n * f->d(); }

  std::vector<long long> decode(long long enc) const;
  long long encode(const std::vector<long long>& u) const;
  long long add(long long a, long long b) const;
  long long neg(long long a) const;
  long long scalar_mul(long long c, long long u) const;  // c in F_q
};

/// An invertible semilinear map on U: matrix A over F_q together with a
/// field automorphism tau^e.  Row-vector action, matrix first:
///
///   u |-> (u A)^(tau^e)
///
/// Composition is left-to-right ("apply this, then o"), which works out to
///
///   (A, tau^a) (B, tau^b) = (A * B^(tau^-a), tau^(a+b)).
///
/// Worked 1x1 example in GF(4) = {0, 1, w, w^2}: g = (w, tau) sends
/// u -> (u w)^2 = u^2 w^2, and h = (w, 1) sends u -> u w.  Then g * h sends
/// u -> u^2 w^3 = u^2, and indeed A B^(tau^-1) = w * w^2 = 1 with exponent
/// 1 + 0 = 1: the map u -> u^2.
struct SemilinearMap {
  const Field* f = nullptr;
  int n = 1;
  std::vector<long long> mat;  // n*n element codes, row-major
  int frob = 0;                // exponent e of tau^e, in [0, d)

  static SemilinearMap identity(const Field& f, int n);
  static SemilinearMap scalar(const Field& f, int n, long long c);
  static SemilinearMap frobenius(const Field& f, int n, long long e);
  static SemilinearMap from_matrix(const Field& f, int n,
                                   std::vector<long long> codes,
                                   long long e = 0);

  long long entry(int r, int c) const { return mat[r * n + c]; }
  bool invertible() const;
  long long apply_enc(const USpace& u, long long enc) const;
  std::vector<long long> apply(const std::vector<long long>& u) const;

  SemilinearMap operator*(const SemilinearMap& o) const;
  SemilinearMap inverse() const;
  bool is_identity() const;
  bool operator==(const SemilinearMap& o) const {
    return frob == o.frob && mat == o.mat;
  }

  Perm to_perm(const USpace& u) const;
};

struct SemilinearHash {
  size_t operator()(const SemilinearMap& m) const {
    size_t h = size_t(m.frob) + 1;
    for (long long v : m.mat) h = h * 1000003u + size_t(v) + 0x9e3779b9u;
    return h;
  }
};

/// alpha(K) for a closed set of semilinear maps: the exponent l in [1, d]
/// with <tau^l> = the group of automorphism parts (l = d means trivial).
int alpha_subgroup_exponent(const std::vector<SemilinearMap>& elems, int d);

/// Canonical representative in [1, d] of an automorphism exponent (0 -> d).
int canonical_exponent(long long e, int d);

/// Recognize a permutation of U as a semilinear map, if it is one.
std::optional<SemilinearMap> semilinear_from_perm(const USpace& u,
                                                  const Perm& p);

}  // namespace lsgq

#endif
