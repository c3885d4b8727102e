#ifndef LSGQ_AUTOPARA_HPP
#define LSGQ_AUTOPARA_HPP

#include <array>
#include <optional>

#include "lsgq/grouptable.hpp"
#include "lsgq/perm.hpp"

namespace lsgq {

/// An element [(sigma1, sigma2, sigma3), gamma] of Sym(H) wr Sym(3) in its
/// product action on H^3:
///
///   (h_1, h_2, h_3)^g = (h_{1'}^{sigma_{1'}}, h_{2'}^{sigma_{2'}},
///                        h_{3'}^{sigma_{3'}}),   i' = i^(gamma^-1).
///
/// Components are stored structurally, never flattened to a permutation of
/// H^3, so the coordinate part stays directly readable.  Composition is
/// left-to-right like Perm: gamma3 = gamma1 * gamma2 and
/// sigma3[k] = sigma1[k] * sigma2[gamma1(k)].
struct Autoparatopism {
  std::array<Perm, 3> sigma;
  Perm gamma;  // permutation of {0,1,2}

  static Autoparatopism identity(int n) {
    Autoparatopism a;
    for (int k = 0; k < 3; ++k) a.sigma[k] = Perm::identity(n);
    a.gamma = Perm::identity(3);
    return a;
  }

  int degree() const { return sigma[0].degree(); }

  std::array<int, 3> apply(const std::array<int, 3>& t) const {
    Perm ginv = gamma.inverse();
    std::array<int, 3> out;
    for (int i = 0; i < 3; ++i) {
      int ip = ginv(i);
      out[i] = sigma[ip](t[ip]);
    }
    return out;
  }

  Autoparatopism operator*(const Autoparatopism& o) const {
    Autoparatopism r;
    r.gamma = gamma * o.gamma;
    for (int k = 0; k < 3; ++k) r.sigma[k] = sigma[k] * o.sigma[gamma(k)];
    return r;
  }

  Autoparatopism inverse() const {
    Autoparatopism r;
    r.gamma = gamma.inverse();
    for (int m = 0; m < 3; ++m) r.sigma[m] = sigma[r.gamma(m)].inverse();
    return r;
  }

  bool is_identity() const {
    return gamma.is_identity() && sigma[0].is_identity() &&
           sigma[1].is_identity() && sigma[2].is_identity();
  }
  bool operator==(const Autoparatopism& o) const {
    return gamma == o.gamma && sigma == o.sigma;
  }
};

struct AutoparatopismHash {
  size_t operator()(const Autoparatopism& a) const {
    PermHash ph;
    size_t h = ph(a.gamma);
    for (int k = 0; k < 3; ++k) h = h * 1000003u ^ ph(a.sigma[k]);
    return h;
  }
};

/// The coordinate 3-cycle x = [(id, phi, phi), (1 2 3)] and the transposition
/// y = [(id, phi, id), (1 3)], with phi : h -> h^-1.  Autoparatopisms of the
/// Cayley table of any finite group; <x, y> is isomorphic to Sym(3).
std::pair<Autoparatopism, Autoparatopism> make_x_y(const GroupTable& h);

/// Diagonal embedding (sigma, sigma, sigma) with trivial coordinate part.
Autoparatopism diagonal(const Perm& sigma);

/// The autotopism (lambda_a, rho_b, lambda_a rho_b); for abelian H written
/// additively this is the translation (rho_a', rho_b, rho_{a'+b}) with
/// a' = -a inverted, i.e. translations of the Cayley presentation.
Autoparatopism translation(const GroupTable& h, int a, int b);

/// Translation by the vector (a, b) of an elementary abelian H:
/// (rho_a, rho_b, rho_{a+b}).
Autoparatopism translation_add(const GroupTable& h, int a, int b);

/// True when e maps cells of the Cayley table of h to cells.
bool preserves_cayley_table(const GroupTable& h, const Autoparatopism& e);

/// Projections of a stabilizer element e = diagonal(sigma) * z with z in
/// <x, y>: theta(e) = the coordinate part, pi(e) = sigma.  Throws
/// NotInStabilizer when e does not factor this way (i.e. does not fix the
/// identity cell with diagonal linear part).
struct StabilizerProjection {
  Perm pi;     // permutation of H
  Perm theta;  // permutation of {0,1,2}
};
StabilizerProjection pi_theta(const GroupTable& h, const Autoparatopism& e);

/// The canonical coset representative z in <x,y> with the given coordinate
/// part, built from Table rows of x and y.
Autoparatopism xy_rep(const GroupTable& h, const Perm& gamma);

}  // namespace lsgq

#endif
