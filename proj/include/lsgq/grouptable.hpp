#ifndef LSGQ_GROUPTABLE_HPP
#define LSGQ_GROUPTABLE_HPP

#include <string>
#include <vector>

#include "lsgq/perm.hpp"

namespace lsgq {

/// A small finite group given by its Cayley table.  Element 0 is the
/// identity.  Only meant for desk-scale orders (the arc-transitivity suite
/// uses |H| <= 9).
struct GroupTable {
  std::string name;
  int n = 0;
  std::vector<int> mul_table;  // n*n row-major: mul_table[a*n+b] = ab
  std::vector<int> inv_table;

  int mul(int a, int b) const { return mul_table[a * n + b]; }
  int inv(int a) const { return inv_table[a]; }
  bool abelian() const;
  bool elementary_abelian() const;

  /// h -> h^-1 as a permutation.
  Perm inversion_perm() const;
  /// h -> a^-1 h (left division) and h -> h b (right multiplication).
  Perm lambda(int a) const;
  Perm rho(int b) const;

  void validate() const;  // associativity, identity, inverses
};

GroupTable cyclic_group(int n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable symmetric3();
GroupTable dihedral8();    // symmetries of the square, order 8
GroupTable quaternion8();  // Q8
GroupTable elementary_abelian_group(long long p, int d);

/// All automorphisms, found by exhaustive scan over permutations fixing the
/// identity.  Fine for |H| <= 9 (at most 8! candidates).
std::vector<Perm> automorphism_group(const GroupTable& h);

}  // namespace lsgq

#endif
