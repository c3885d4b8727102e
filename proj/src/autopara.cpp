#include "lsgq/autopara.hpp"

#include "lsgq/errors.hpp"

namespace lsgq {

std::pair<Autoparatopism, Autoparatopism> make_x_y(const GroupTable& h) {
  Perm iota = Perm::identity(h.n);
  Perm phi = h.inversion_perm();
  Autoparatopism x, y;
  x.sigma = {iota, phi, phi};
  x.gamma = Perm({1, 2, 0});  // (1 2 3)
  y.sigma = {iota, phi, iota};
  y.gamma = Perm({2, 1, 0});  // (1 3)
  return {x, y};
}

Autoparatopism diagonal(const Perm& sigma) {
  Autoparatopism a;
  a.sigma = {sigma, sigma, sigma};
  a.gamma = Perm::identity(3);
  return a;
}

Autoparatopism translation(const GroupTable& h, int a, int b) {
  Autoparatopism t;
  t.sigma = {h.lambda(a), h.rho(b), h.lambda(a) * h.rho(b)};
  t.gamma = Perm::identity(3);
  return t;
}

Autoparatopism translation_add(const GroupTable& h, int a, int b) {
  Autoparatopism t;
  t.sigma = {h.rho(a), h.rho(b), h.rho(h.mul(a, b))};
  t.gamma = Perm::identity(3);
  return t;
}

bool preserves_cayley_table(const GroupTable& h, const Autoparatopism& e) {
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b) {
      std::array<int, 3> img = e.apply({a, b, h.mul(a, b)});
      if (h.mul(img[0], img[1]) != img[2]) return false;
    }
  return true;
}

Autoparatopism xy_rep(const GroupTable& h, const Perm& gamma) {
  auto [x, y] = make_x_y(h);
  const Autoparatopism id = Autoparatopism::identity(h.n);
  for (const Autoparatopism& z :
       {id, x, x * x, y, x * y, x * x * y})
    if (z.gamma == gamma) return z;
  throw Error("xy_rep: not a permutation of {0,1,2}");
}

StabilizerProjection pi_theta(const GroupTable& h, const Autoparatopism& e) {
  Autoparatopism z = xy_rep(h, e.gamma);
  Autoparatopism diag = e * z.inverse();
  if (!diag.gamma.is_identity() || !(diag.sigma[0] == diag.sigma[1]) ||
      !(diag.sigma[0] == diag.sigma[2]))
    throw NotInStabilizer(
        "pi_theta: element is not of the form diagonal(sigma) * z");
  if (diag.sigma[0](0) != 0)
    throw NotInStabilizer("pi_theta: element does not fix the identity cell");
  return {diag.sigma[0], e.gamma};
}

}  // namespace lsgq
