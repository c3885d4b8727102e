#include "lsgq/subspace.hpp"

#include <algorithm>

#include "lsgq/errors.hpp"

namespace lsgq {

VSpace::VSpace(long long p_, int d_) : p(p_), d(d_), usize(1) {
  for (int k = 0; k < d; ++k) usize *= p;
}

std::vector<int> VSpace::decode(long long v) const {
  std::vector<int> x(2 * d);
  long long a = a_of(v), b = b_of(v);
  for (int k = 0; k < d; ++k) {
    x[k] = int(a % p);
    a /= p;
    x[d + k] = int(b % p);
    b /= p;
  }
  return x;
}

long long VSpace::encode(const std::vector<int>& x) const {
  long long a = 0, b = 0;
  for (int k = d - 1; k >= 0; --k) {
    a = a * p + x[k];
    b = b * p + x[d + k];
  }
  return enc_pair(a, b);
}

PMatrix PMatrix::identity(long long p, int dim) {
  PMatrix out;
  out.p = p;
  out.dim = dim;
  out.m.assign(dim * dim, 0);
  for (int k = 0; k < dim; ++k) out.m[k * dim + k] = 1;
  return out;
}

std::vector<int> PMatrix::apply(const std::vector<int>& x) const {
  std::vector<int> y(dim, 0);
  for (int r = 0; r < dim; ++r) {
    if (x[r] == 0) continue;
    for (int c = 0; c < dim; ++c)
      y[c] = int((y[c] + 1LL * x[r] * at(r, c)) % p);
  }
  return y;
}

long long PMatrix::apply_enc(const VSpace& v, long long enc) const {
  return v.encode(apply(v.decode(enc)));
}

PMatrix PMatrix::operator*(const PMatrix& o) const {
  PMatrix out;
  out.p = p;
  out.dim = dim;
  out.m.assign(dim * dim, 0);
  for (int r = 0; r < dim; ++r)
    for (int k = 0; k < dim; ++k) {
      if (at(r, k) == 0) continue;
      for (int c = 0; c < dim; ++c)
        out.m[r * dim + c] =
            int((out.m[r * dim + c] + 1LL * at(r, k) * o.at(k, c)) % p);
    }
  return out;
}

PSubspace PSubspace::zero(long long p, int ambient) {
  PSubspace s;
  s.p = p;
  s.ambient = ambient;
  return s;
}

namespace {

// Reduce x by the echelon rows in place; returns the pivot column of the
// remainder or -1 when x reduces to zero.
int reduce_vector(std::vector<int>& x,
                  const std::vector<std::vector<int>>& rows, long long p) {
  for (const auto& r : rows) {
    int piv = -1;
    for (int c = 0; c < int(r.size()); ++c)
      if (r[c] != 0) {
        piv = c;
        break;
      }
    if (piv >= 0 && x[piv] != 0) {
      long long factor = x[piv];  // rows are normalized to pivot 1
      for (int c = 0; c < int(x.size()); ++c)
        x[c] = int(((x[c] - factor * r[c]) % p + p) % p);
    }
  }
  for (int c = 0; c < int(x.size()); ++c)
    if (x[c] != 0) return c;
  return -1;
}

long long inv_mod(long long a, long long p) {
  long long r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

PSubspace PSubspace::span(long long p, int ambient,
                          const std::vector<std::vector<int>>& vectors) {
  PSubspace s = zero(p, ambient);
  for (const auto& vec : vectors) {
    std::vector<int> x = vec;
    int piv = reduce_vector(x, s.basis, p);
    if (piv < 0) continue;
    long long inv = inv_mod(x[piv], p);
    for (int c = 0; c < ambient; ++c) x[c] = int(x[c] * inv % p);
    // back-substitute into existing rows, keep reduced echelon form
    for (auto& r : s.basis)
      if (r[piv] != 0) {
        long long f = r[piv];
        for (int c = 0; c < ambient; ++c)
          r[c] = int(((r[c] - f * x[c]) % p + p) % p);
      }
    s.basis.push_back(x);
    std::sort(s.basis.begin(), s.basis.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                auto pa = std::find_if(a.begin(), a.end(),
                                       [](int v) { return v != 0; });
                auto pb = std::find_if(b.begin(), b.end(),
                                       [](int v) { return v != 0; });
                return (pa - a.begin()) < (pb - b.begin());
              });
  }
  return s;
}

bool PSubspace::contains(const std::vector<int>& x) const {
  std::vector<int> y = x;
  return reduce_vector(y, basis, p) < 0;
}

bool PSubspace::contains_subspace(const PSubspace& o) const {
  for (const auto& r : o.basis)
    if (!contains(r)) return false;
  return true;
}

PSubspace PSubspace::join(const PSubspace& o) const {
  std::vector<std::vector<int>> vecs = basis;
  vecs.insert(vecs.end(), o.basis.begin(), o.basis.end());
  return span(p, ambient, vecs);
}

bool PSubspace::operator<(const PSubspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return basis < o.basis;
}

std::vector<long long> PSubspace::encoded_rows(const VSpace& v) const {
  std::vector<long long> out;
  for (const auto& r : basis) out.push_back(v.encode(r));
  return out;
}

PSubspace subspace_Vc(const VSpace& v, const USpace& u, long long c_code) {
  std::vector<std::vector<int>> vecs;
  for (int t = 0; t < v.d; ++t) {
    long long e = 1;
    for (int k = 0; k < t; ++k) e *= v.p;
    long long ce = u.scalar_mul(c_code, e);
    vecs.push_back(v.decode(v.enc_pair(e, ce)));
  }
  return PSubspace::span(v.p, v.dim(), vecs);
}

PSubspace subspace_Vinf(const VSpace& v, const USpace& u) {
  (void)u;
  std::vector<std::vector<int>> vecs;
  for (int t = 0; t < v.d; ++t) {
    long long e = 1;
    for (int k = 0; k < t; ++k) e *= v.p;
    vecs.push_back(v.decode(v.enc_pair(0, e)));
  }
  return PSubspace::span(v.p, v.dim(), vecs);
}

std::string TaggedSubspace::label() const {
  switch (tag) {
    case SpanTag::Zero:
      return "0";
    case SpanTag::Vinf:
      return "V_inf";
    case SpanTag::Full:
      return "V";
    case SpanTag::Vc:
      return "V_c(c=" + std::to_string(c) + ")";
    default:
      return "other(dim=" + std::to_string(space.dim()) + ")";
  }
}

TaggedSubspace tag_subspace(const VSpace& v, const USpace& u,
                            const PSubspace& s) {
  TaggedSubspace out;
  out.space = s;
  if (s.dim() == 0) {
    out.tag = SpanTag::Zero;
    return out;
  }
  if (s.dim() == v.dim()) {
    out.tag = SpanTag::Full;
    return out;
  }
  if (s.dim() != v.d) {
    out.tag = SpanTag::Other;
    return out;
  }
  // Candidate V_inf: every basis row has zero a-part.
  bool a_zero = true;
  for (const auto& r : s.basis)
    for (int k = 0; k < v.d && a_zero; ++k)
      if (r[k] != 0) a_zero = false;
  if (a_zero) {
    out.tag = SpanTag::Vinf;
    return out;
  }
  // Candidate V_c: find c from a row with nonzero a-part, then verify all
  // rows satisfy b = c a (F_q scalar action on U).
  const Field& f = *u.f;
  long long c_code = -1;
  for (const auto& r : s.basis) {
    long long a = 0, b = 0;
    for (int k = v.d - 1; k >= 0; --k) {
      a = a * v.p + r[k];
      b = b * v.p + r[v.d + k];
    }
    if (a == 0) continue;
    std::vector<long long> ua = u.decode(a), ub = u.decode(b);
    int comp = -1;
    for (int k = 0; k < u.n; ++k)
      if (ua[k] != 0) {
        comp = k;
        break;
      }
    c_code = f.mul(ub[comp], f.inv(ua[comp]));
    break;
  }
  if (c_code < 0) {
    out.tag = SpanTag::Other;
    return out;
  }
  PSubspace vc = subspace_Vc(v, u, c_code);
  if (vc == s) {
    out.tag = SpanTag::Vc;
    out.c = c_code;
  } else {
    out.tag = SpanTag::Other;
  }
  return out;
}

}  // namespace lsgq
