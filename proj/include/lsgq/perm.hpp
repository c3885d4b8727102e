#ifndef LSGQ_PERM_HPP
#define LSGQ_PERM_HPP

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "lsgq/errors.hpp"

namespace lsgq {

/// Dense permutation of [0, n).  Composition is left-to-right:
/// (a * b)[x] = b[a[x]], matching the right action x^(ab) = (x^a)^b.
struct Perm {
  std::vector<int32_t> img;

  Perm() = default;
  explicit Perm(std::vector<int32_t> v) : img(std::move(v)) {}
  static Perm identity(int n) {
    Perm p;
    p.img.resize(n);
    for (int k = 0; k < n; ++k) p.img[k] = k;
    return p;
  }

  int degree() const { return int(img.size()); }
  int operator()(int x) const { return img[x]; }

  Perm operator*(const Perm& o) const {
    Perm r;
    r.img.resize(img.size());
    for (size_t k = 0; k < img.size(); ++k) r.img[k] = o.img[img[k]];
    return r;
  }
  Perm inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (size_t k = 0; k < img.size(); ++k) r.img[img[k]] = int32_t(k);
    return r;
  }
  bool is_identity() const {
    for (size_t k = 0; k < img.size(); ++k)
      if (img[k] != int32_t(k)) return false;
    return true;
  }
  bool operator==(const Perm& o) const { return img == o.img; }
  bool valid() const {
    std::vector<char> seen(img.size(), 0);
    for (int32_t v : img) {
      if (v < 0 || v >= int32_t(img.size()) || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = p.img.size();
    for (int32_t v : p.img) h = h * 1000003u + size_t(v) + 0x9e3779b9u;
    return h;
  }
};

/// Breadth-first multiplication closure of a generating set.  Contains the
/// identity and is closed under products and inverses (finite order).
/// Throws BoundExceeded past max_size.
template <typename T, typename Hash>
std::vector<T> close_group(const std::vector<T>& gens, const T& id,
                           size_t max_size, Hash hash = Hash()) {
  std::unordered_set<T, Hash> seen(16, hash);
  std::vector<T> elems;
  seen.insert(id);
  elems.push_back(id);
  std::vector<T> frontier{id};
  while (!frontier.empty()) {
    std::vector<T> next;
    for (const T& e : frontier)
      for (const T& g : gens) {
        T prod = e * g;
        if (seen.insert(prod).second) {
          elems.push_back(prod);
          next.push_back(prod);
          if (elems.size() > max_size)
            throw BoundExceeded("close_group: size bound " +
                                std::to_string(max_size) + " exceeded");
        }
      }
    frontier = std::move(next);
  }
  return elems;
}

/// Orbit of a point under generator maps, as the minimal closed set.
template <typename P, typename Hash = std::hash<P>>
std::vector<P> orbit_of(const P& start,
                        const std::vector<std::function<P(const P&)>>& gens,
                        size_t max_size) {
  std::unordered_set<P, Hash> seen;
  std::vector<P> out{start};
  seen.insert(start);
  for (size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens) {
      P y = g(out[k]);
      if (seen.insert(y).second) {
        out.push_back(y);
        if (out.size() > max_size)
          throw BoundExceeded("orbit: size bound exceeded");
      }
    }
  }
  return out;
}

/// Orbit of an integer point under permutations.
std::vector<int> orbit_ints(int start, const std::vector<Perm>& gens);

}  // namespace lsgq

#endif
