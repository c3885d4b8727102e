#include "lsgq/grouptable.hpp"

#include <algorithm>
#include <numeric>

#include "lsgq/errors.hpp"
#include "lsgq/intutil.hpp"

namespace lsgq {

bool GroupTable::abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool GroupTable::elementary_abelian() const {
  if (n == 1) return true;
  if (!abelian()) return false;
  // Every non-identity element must have the same prime order p.
  int p = 0;
  for (int a = 1; a < n; ++a) {
    int ord = 1, acc = a;
    while (acc != 0) {
      acc = mul(acc, a);
      ++ord;
    }
    if (p == 0) {
      if (!is_prime(ord)) return false;
      p = ord;
    } else if (ord != p) {
      return false;
    }
  }
  return true;
}

Perm GroupTable::inversion_perm() const {
  Perm p;
  p.img.assign(inv_table.begin(), inv_table.end());
  return p;
}

Perm GroupTable::lambda(int a) const {
  Perm p;
  p.img.resize(n);
  int ai = inv(a);
  for (int h = 0; h < n; ++h) p.img[h] = mul(ai, h);
  return p;
}

Perm GroupTable::rho(int b) const {
  Perm p;
  p.img.resize(n);
  for (int h = 0; h < n; ++h) p.img[h] = mul(h, b);
  return p;
}

void GroupTable::validate() const {
  for (int a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw Error("group table: identity");
    if (mul(a, inv(a)) != 0) throw Error("group table: inverses");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error("group table: associativity");
}

GroupTable cyclic_group(int n) {
  GroupTable g;
  g.name = "C" + std::to_string(n);
  g.n = n;
  g.mul_table.resize(n * n);
  g.inv_table.resize(n);
  for (int a = 0; a < n; ++a) {
    g.inv_table[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) g.mul_table[a * n + b] = (a + b) % n;
  }
  return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  GroupTable g;
  g.name = a.name + "x" + b.name;
  g.n = a.n * b.n;
  g.mul_table.resize(g.n * g.n);
  g.inv_table.resize(g.n);
  auto enc = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1) {
      int e1 = enc(x1, y1);
      g.inv_table[e1] = enc(a.inv(x1), b.inv(y1));
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          g.mul_table[e1 * g.n + enc(x2, y2)] =
              enc(a.mul(x1, x2), b.mul(y1, y2));
    }
  return g;
}

GroupTable symmetric3() {
  // Elements as permutations of 3 points: 0:id 1:(01) 2:(02) 3:(12)
  // 4:(012) 5:(021), composed left-to-right.
  static const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                  {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto compose = [&](int a, int b) {
    int img[3];
    for (int x = 0; x < 3; ++x) img[x] = perms[b][perms[a][x]];
    for (int k = 0; k < 6; ++k)
      if (perms[k][0] == img[0] && perms[k][1] == img[1] &&
          perms[k][2] == img[2])
        return k;
    return -1;
  };
  GroupTable g;
  g.name = "Sym3";
  g.n = 6;
  g.mul_table.resize(36);
  g.inv_table.resize(6);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      g.mul_table[a * 6 + b] = compose(a, b);
      if (g.mul_table[a * 6 + b] == 0) g.inv_table[a] = b;
    }
  }
  return g;
}

GroupTable dihedral8() {
  // r^4 = s^2 = 1, s r s = r^-1.  Encode k in [0,4) as r^k, 4+k as s r^k.
  GroupTable g;
  g.name = "D4";
  g.n = 8;
  g.mul_table.resize(64);
  g.inv_table.resize(8);
  auto mul = [&](int a, int b) {
    int ka = a % 4, sa = a / 4, kb = b % 4, sb = b / 4;
    // (s^sa r^ka)(s^sb r^kb) = s^(sa+sb) r^(±ka + kb)
    int k = sb ? ((4 - ka) % 4 + kb) % 4 : (ka + kb) % 4;
    return ((sa + sb) % 2) * 4 + k;
  };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      g.mul_table[a * 8 + b] = mul(a, b);
      if (mul(a, b) == 0) g.inv_table[a] = b;
    }
  return g;
}

GroupTable quaternion8() {
  // {1, -1, i, -i, j, -j, k, -k} as 0..7 with sign bit in the low position:
  // element 2u + s meaning (-1)^s * e_u with e_0 = 1, e_1 = i, e_2 = j,
  // e_3 = k.
  auto base_mul = [](int a, int b, int* sign) {
    // e_a * e_b, returning unit index and sign
    static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2},
                                  {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1},
                                  {1, -1, -1, 1}, {1, 1, -1, -1}};
    *sign = sgn[a][b];
    return idx[a][b];
  };
  GroupTable g;
  g.name = "Q8";
  g.n = 8;
  g.mul_table.resize(64);
  g.inv_table.resize(8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sa = a & 1, ua = a >> 1, sb = b & 1, ub = b >> 1;
      int sign;
      int u = base_mul(ua, ub, &sign);
      int s = (sa + sb + (sign < 0 ? 1 : 0)) % 2;
      g.mul_table[a * 8 + b] = (u << 1) | s;
      if (g.mul_table[a * 8 + b] == 0) g.inv_table[a] = b;
    }
  return g;
}

GroupTable elementary_abelian_group(long long p, int d) {
  if (!is_prime(p)) throw NonPrime("elementary_abelian_group");
  long long n = 1;
  for (int k = 0; k < d; ++k) n *= p;
  GroupTable g;
  g.name = "C" + std::to_string(p) + "^" + std::to_string(d);
  g.n = int(n);
  g.mul_table.resize(n * n);
  g.inv_table.resize(n);
  auto add = [&](long long a, long long b) {
    long long r = 0, mult = 1;
    for (int t = 0; t < d; ++t) {
      r += ((a % p) + (b % p)) % p * mult;
      a /= p;
      b /= p;
      mult *= p;
    }
    return r;
  };
  auto negate = [&](long long a) {
    long long r = 0, mult = 1;
    for (int t = 0; t < d; ++t) {
      r += ((p - a % p) % p) * mult;
      a /= p;
      mult *= p;
    }
    return r;
  };
  for (long long a = 0; a < n; ++a) {
    g.inv_table[a] = int(negate(a));
    for (long long b = 0; b < n; ++b) g.mul_table[a * n + b] = int(add(a, b));
  }
  return g;
}

std::vector<Perm> automorphism_group(const GroupTable& h) {
  const int n = h.n;
  std::vector<Perm> out;
  std::vector<int32_t> img(n);
  img[0] = 0;
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  // Exhaustive over permutations of the non-identity elements.
  std::sort(rest.begin(), rest.end());
  do {
    for (int k = 1; k < n; ++k) img[k] = rest[k - 1];
    bool hom = true;
    for (int a = 1; a < n && hom; ++a)
      for (int b = a; b < n && hom; ++b) {
        if (img[h.mul(a, b)] != h.mul(img[a], img[b])) hom = false;
        if (img[h.mul(b, a)] != h.mul(img[b], img[a])) hom = false;
      }
    if (hom) out.push_back(Perm(img));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace lsgq
