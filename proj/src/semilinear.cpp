#include "lsgq/semilinear.hpp"

#include <algorithm>

#include "lsgq/errors.hpp"
#include "lsgq/intutil.hpp"

namespace lsgq {

std::vector<long long> USpace::decode(long long enc) const {
  std::vector<long long> u(n);
  const long long q = f->order();
  for (int k = 0; k < n; ++k) {
    u[k] = enc % q;
    enc /= q;
  }
  return u;
}

long long USpace::encode(const std::vector<long long>& u) const {
  long long enc = 0;
  const long long q = f->order();
  for (int k = n - 1; k >= 0; --k) enc = enc * q + u[k];
  return enc;
}

long long USpace::add(long long a, long long b) const {
  std::vector<long long> ua = decode(a), ub = decode(b);
  for (int k = 0; k < n; ++k) ua[k] = f->add(ua[k], ub[k]);
  return encode(ua);
}

long long USpace::neg(long long a) const {
  std::vector<long long> ua = decode(a);
  for (int k = 0; k < n; ++k) ua[k] = f->neg(ua[k]);
  return encode(ua);
}

long long USpace::scalar_mul(long long c, long long u) const {
  std::vector<long long> v = decode(u);
  for (int k = 0; k < n; ++k) v[k] = f->mul(c, v[k]);
  return encode(v);
}

SemilinearMap SemilinearMap::identity(const Field& f, int n) {
  SemilinearMap m;
  m.f = &f;
  m.n = n;
  m.mat.assign(n * n, 0);
  for (int k = 0; k < n; ++k) m.mat[k * n + k] = 1;
  m.frob = 0;
  return m;
}

SemilinearMap SemilinearMap::scalar(const Field& f, int n, long long c) {
  if (c == 0) throw ArgumentOutOfRange("semilinear scalar: c = 0");
  SemilinearMap m = identity(f, n);
  for (int k = 0; k < n; ++k) m.mat[k * n + k] = c;
  return m;
}

SemilinearMap SemilinearMap::frobenius(const Field& f, int n, long long e) {
  SemilinearMap m = identity(f, n);
  m.frob = int(((e % f.d()) + f.d()) % f.d());
  return m;
}

SemilinearMap SemilinearMap::from_matrix(const Field& f, int n,
                                         std::vector<long long> codes,
                                         long long e) {
  if (int(codes.size()) != n * n)
    throw ArgumentOutOfRange("semilinear matrix: need n*n entries");
  SemilinearMap m;
  m.f = &f;
  m.n = n;
  m.mat = std::move(codes);
  m.frob = int(((e % f.d()) + f.d()) % f.d());
  if (!m.invertible())
    throw ArgumentOutOfRange("semilinear matrix: not invertible");
  return m;
}

bool SemilinearMap::invertible() const {
  // Gaussian elimination over F_q.
  std::vector<long long> a = mat;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r * n + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != col)
      for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
    long long inv = f->inv(a[col * n + col]);
    for (int c = 0; c < n; ++c) a[col * n + c] = f->mul(a[col * n + c], inv);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      long long factor = a[r * n + col];
      for (int c = 0; c < n; ++c)
        a[r * n + c] = f->sub(a[r * n + c], f->mul(factor, a[col * n + c]));
    }
  }
  return true;
}

std::vector<long long> SemilinearMap::apply(
    const std::vector<long long>& u) const {
  std::vector<long long> out(n, 0);
  for (int c = 0; c < n; ++c) {
    long long acc = 0;
    for (int r = 0; r < n; ++r) acc = f->add(acc, f->mul(u[r], entry(r, c)));
    out[c] = f->frob(acc, frob);
  }
  return out;
}

long long SemilinearMap::apply_enc(const USpace& u, long long enc) const {
  return u.encode(apply(u.decode(enc)));
}

SemilinearMap SemilinearMap::operator*(const SemilinearMap& o) const {
  SemilinearMap r;
  r.f = f;
  r.n = n;
  r.frob = int((frob + o.frob) % f->d());
  // B^(tau^-a) entrywise, then A * that.
  std::vector<long long> bt(n * n);
  for (int k = 0; k < n * n; ++k) bt[k] = f->frob(o.mat[k], f->d() - frob);
  r.mat.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long acc = 0;
      for (int k = 0; k < n; ++k)
        acc = f->add(acc, f->mul(entry(i, k), bt[k * n + j]));
      r.mat[i * n + j] = acc;
    }
  return r;
}

SemilinearMap SemilinearMap::inverse() const {
  // Inverse matrix over F_q, then twist: (A, tau^e)^-1 = ((A^-1)^(tau^e),
  // tau^-e), since composing gives (A * A^-1, tau^0).
  std::vector<long long> a = mat;
  std::vector<long long> b(n * n, 0);
  for (int k = 0; k < n; ++k) b[k * n + k] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r * n + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("semilinear inverse: singular matrix");
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a[piv * n + c], a[col * n + c]);
        std::swap(b[piv * n + c], b[col * n + c]);
      }
    long long inv = f->inv(a[col * n + col]);
    for (int c = 0; c < n; ++c) {
      a[col * n + c] = f->mul(a[col * n + c], inv);
      b[col * n + c] = f->mul(b[col * n + c], inv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      long long factor = a[r * n + col];
      for (int c = 0; c < n; ++c) {
        a[r * n + c] = f->sub(a[r * n + c], f->mul(factor, a[col * n + c]));
        b[r * n + c] = f->sub(b[r * n + c], f->mul(factor, b[col * n + c]));
      }
    }
  }
  SemilinearMap r;
  r.f = f;
  r.n = n;
  r.frob = int((f->d() - frob) % f->d());
  r.mat.resize(n * n);
  for (int k = 0; k < n * n; ++k) r.mat[k] = f->frob(b[k], frob);
  return r;
}

bool SemilinearMap::is_identity() const {
  if (frob != 0) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (entry(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Perm SemilinearMap::to_perm(const USpace& u) const {
  Perm p;
  p.img.resize(u.size());
  for (long long enc = 0; enc < u.size(); ++enc)
    p.img[enc] = int32_t(apply_enc(u, enc));
  return p;
}

int alpha_subgroup_exponent(const std::vector<SemilinearMap>& elems, int d) {
  long long g = d;
  for (const SemilinearMap& m : elems) g = gcd_ll(g, m.frob);
  return int(g == 0 ? d : g);
}

int canonical_exponent(long long e, int d) {
  long long r = ((e % d) + d) % d;
  return int(r == 0 ? d : r);
}

std::optional<SemilinearMap> semilinear_from_perm(const USpace& u,
                                                  const Perm& p) {
  const Field& f = *u.f;
  const int n = u.n;
  if (p.img.size() != size_t(u.size())) return std::nullopt;
  if (p(0) != 0) return std::nullopt;
  for (int e = 0; e < f.d(); ++e) {
    // Try twist tau^e: check u -> p(u)^(tau^-e) for F_q-linearity and
    // extract the matrix from images of basis vectors.
    std::vector<long long> mat(n * n);
    for (int r = 0; r < n; ++r) {
      std::vector<long long> basis(n, 0);
      basis[r] = 1;
      long long img = p(int(u.encode(basis)));
      std::vector<long long> row = u.decode(img);
      for (int c = 0; c < n; ++c) mat[r * n + c] = f.frob(row[c], f.d() - e);
    }
    SemilinearMap cand;
    cand.f = &f;
    cand.n = n;
    cand.mat = mat;
    cand.frob = e;
    if (!cand.invertible()) continue;
    bool ok = true;
    for (long long enc = 0; enc < u.size() && ok; ++enc)
      if (cand.apply_enc(u, enc) != p(int(enc))) ok = false;
    if (ok) return cand;
  }
  return std::nullopt;
}

}  // namespace lsgq
