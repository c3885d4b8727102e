#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsgq/autopara.hpp"
#include "lsgq/errors.hpp"
#include "lsgq/grouptable.hpp"
#include "lsgq/semilinear.hpp"
#include "lsgq/stabilizer.hpp"

#include <functional>
#include <set>

using namespace lsgq;

namespace {

std::array<int, 3> triple(const GroupTable& h, int a, int b) {
  return {a, b, h.mul(a, b)};
}

}  // namespace

TEST_CASE("group tables are groups") {
  for (const GroupTable& g :
       {cyclic_group(6), symmetric3(), dihedral8(), quaternion8(),
        elementary_abelian_group(3, 2)})
    g.validate();
  CHECK(symmetric3().abelian() == false);
  CHECK(quaternion8().elementary_abelian() == false);
  CHECK(elementary_abelian_group(2, 3).elementary_abelian());
  CHECK(cyclic_group(9).elementary_abelian() == false);
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(cyclic_group(5)).size() == 4);
  CHECK(automorphism_group(cyclic_group(8)).size() == 4);
  CHECK(automorphism_group(elementary_abelian_group(2, 2)).size() == 6);
  CHECK(automorphism_group(elementary_abelian_group(2, 3)).size() == 168);
  CHECK(automorphism_group(symmetric3()).size() == 6);
  CHECK(automorphism_group(quaternion8()).size() == 24);
  CHECK(automorphism_group(dihedral8()).size() == 8);
}

TEST_CASE("x and y act per the autoparatopism table") {
  GroupTable h = cyclic_group(5);
  auto [x, y] = make_x_y(h);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      int ab = h.mul(a, b);
      // x: (a, b, ab) -> (b^-1 a^-1, a, b^-1)
      CHECK(x.apply(triple(h, a, b)) ==
            std::array<int, 3>{h.mul(h.inv(b), h.inv(a)), a, h.inv(b)});
      // y: (a, b, ab) -> (ab, b^-1, a)
      CHECK(y.apply(triple(h, a, b)) ==
            std::array<int, 3>{ab, h.inv(b), a});
      // x^2: (b, b^-1 a^-1, a^-1)
      CHECK((x * x).apply(triple(h, a, b)) ==
            std::array<int, 3>{b, h.mul(h.inv(b), h.inv(a)), h.inv(a)});
      // xy: (b^-1, a^-1, b^-1 a^-1)
      CHECK((x * y).apply(triple(h, a, b)) ==
            std::array<int, 3>{h.inv(b), h.inv(a), h.mul(h.inv(b), h.inv(a))});
      // x^2 y: (a^-1, ab, b)
      CHECK((x * x * y).apply(triple(h, a, b)) ==
            std::array<int, 3>{h.inv(a), ab, b});
    }
}

TEST_CASE("x has order 3, y order 2, <x,y> = Sym(3)") {
  for (const GroupTable& h : {cyclic_group(2), elementary_abelian_group(3, 2),
                              symmetric3()}) {
    auto [x, y] = make_x_y(h);
    CHECK((x * x * x).is_identity());
    CHECK((y * y).is_identity());
    CHECK(((x * y) * (x * y)).is_identity());
    auto grp = close_group<Autoparatopism, AutoparatopismHash>(
        {x, y}, Autoparatopism::identity(h.n), 100, AutoparatopismHash());
    CHECK(grp.size() == 6);
  }
}

TEST_CASE("x and y preserve any Cayley table") {
  for (const GroupTable& h : {cyclic_group(4), symmetric3(), quaternion8()}) {
    auto [x, y] = make_x_y(h);
    CHECK(preserves_cayley_table(h, x));
    CHECK(preserves_cayley_table(h, y));
    CHECK(preserves_cayley_table(h, translation(h, 2, 3)));
  }
}

TEST_CASE("close_group basics") {
  GroupTable h = cyclic_group(3);
  auto id = Autoparatopism::identity(3);
  auto only_id = close_group<Autoparatopism, AutoparatopismHash>(
      {id}, id, 10, AutoparatopismHash());
  CHECK(only_id.size() == 1);
  // scalars of GF(7) as a cyclic group of order 6
  Field f7(7, 1);
  auto scal = close_group<SemilinearMap, SemilinearHash>(
      {SemilinearMap::scalar(f7, 1, f7.omega_code())},
      SemilinearMap::identity(f7, 1), 100, SemilinearHash());
  CHECK(scal.size() == 6);
  CHECK_THROWS_AS((close_group<SemilinearMap, SemilinearHash>(
                      {SemilinearMap::scalar(f7, 1, f7.omega_code())},
                      SemilinearMap::identity(f7, 1), 3, SemilinearHash())),
                  BoundExceeded);
}

TEST_CASE("orbits") {
  // orbit of 0 under any linear group is {0}
  Field f7(7, 1);
  USpace u{&f7, 1};
  SemilinearMap w = SemilinearMap::scalar(f7, 1, f7.omega_code());
  std::vector<std::function<long long(const long long&)>> acts{
      [&](const long long& v) { return w.apply_enc(u, v); }};
  CHECK(orbit_of<long long>(0, acts, 100) == std::vector<long long>{0});
  // orbit of 1 under the scalars is all six nonzero elements
  CHECK(orbit_of<long long>(1, acts, 100).size() == 6);
  // orbit of (1,1) under the diagonal square-pair group of GF(5) has 8 pairs
  Field f5(5, 1);
  long long w5 = f5.omega_code();
  long long w5sq = f5.mul(w5, w5);
  std::vector<std::function<std::pair<long long, long long>(
      const std::pair<long long, long long>&)>>
      diag{[&](const std::pair<long long, long long>& v) {
             return std::make_pair(f5.mul(v.first, w5), f5.mul(v.second, w5));
           },
           [&](const std::pair<long long, long long>& v) {
             return std::make_pair(f5.mul(v.first, w5sq), v.second);
           }};
  struct PairHash {
    size_t operator()(const std::pair<long long, long long>& p) const {
      return size_t(p.first * 31 + p.second);
    }
  };
  auto orb = orbit_of<std::pair<long long, long long>, PairHash>(
      {1, 1}, diag, 100);
  CHECK(orb.size() == 8);
}

TEST_CASE("conjugating a translation by z in <x,y> translates by (a,b)^z") {
  for (const GroupTable& h :
       {cyclic_group(2), cyclic_group(3), cyclic_group(5),
        elementary_abelian_group(2, 2), elementary_abelian_group(3, 2),
        elementary_abelian_group(2, 3), cyclic_group(7)}) {
    auto [x, y] = make_x_y(h);
    auto zs = close_group<Autoparatopism, AutoparatopismHash>(
        {x, y}, Autoparatopism::identity(h.n), 10, AutoparatopismHash());
    for (const Autoparatopism& z : zs)
      for (int a = 0; a < h.n; ++a)
        for (int b = 0; b < h.n; ++b) {
          Autoparatopism conj = z.inverse() * translation_add(h, a, b) * z;
          std::array<int, 3> img = z.apply(triple(h, a, b));
          CHECK(conj == translation_add(h, img[0], img[1]));
        }
  }
}

TEST_CASE("the translations form a group of order |H|^2") {
  for (const GroupTable& h : {cyclic_group(3), symmetric3()}) {
    std::vector<Autoparatopism> gens;
    for (int a = 0; a < h.n; ++a)
      for (int b = 0; b < h.n; ++b) gens.push_back(translation(h, a, b));
    auto grp = close_group<Autoparatopism, AutoparatopismHash>(
        gens, Autoparatopism::identity(h.n), 2000, AutoparatopismHash());
    CHECK(grp.size() == size_t(h.n) * h.n);
  }
}

TEST_CASE("full autoparatopism group order is |H|^2 |Aut(H)| 6") {
  for (const GroupTable& h :
       {cyclic_group(3), elementary_abelian_group(2, 2)}) {
    auto [x, y] = make_x_y(h);
    std::vector<Autoparatopism> gens{x, y};
    for (int a = 0; a < h.n; ++a)
      for (int b = 0; b < h.n; ++b) gens.push_back(translation(h, a, b));
    size_t aut = automorphism_group(h).size();
    for (const Perm& s : automorphism_group(h)) gens.push_back(diagonal(s));
    auto grp = close_group<Autoparatopism, AutoparatopismHash>(
        gens, Autoparatopism::identity(h.n), 5000, AutoparatopismHash());
    CHECK(grp.size() == size_t(h.n) * h.n * aut * 6);
    for (const Autoparatopism& e : grp) CHECK(preserves_cayley_table(h, e));
  }
}

TEST_CASE("semilinear composition convention") {
  Field f4(2, 2);
  const long long w = f4.omega_code();
  USpace u{&f4, 1};
  SemilinearMap g = SemilinearMap::scalar(f4, 1, w);
  g.frob = 1;
  SemilinearMap h = SemilinearMap::scalar(f4, 1, w);
  SemilinearMap gh = g * h;
  // u -> ((u w)^2) w = u^2 w^3 = u^2
  CHECK(gh.frob == 1);
  CHECK(gh.mat[0] == 1);
  for (long long v = 0; v < 4; ++v)
    CHECK(gh.apply_enc(u, v) == f4.frob(v, 1));
  // inverses compose to the identity
  CHECK((g * g.inverse()).is_identity());
  CHECK((g.inverse() * g).is_identity());
}

TEST_CASE("semilinear associativity on random products") {
  Field f8(2, 3);
  SemilinearMap a = SemilinearMap::scalar(f8, 1, f8.omega_code());
  SemilinearMap b = SemilinearMap::frobenius(f8, 1, 1);
  SemilinearMap c = SemilinearMap::scalar(f8, 1, f8.element(5).code());
  c.frob = 2;
  CHECK(((a * b) * c) == (a * (b * c)));
  USpace u{&f8, 1};
  for (long long v = 0; v < 8; ++v)
    CHECK((a * b).apply_enc(u, v) == b.apply_enc(u, a.apply_enc(u, v)));
}

TEST_CASE("semilinear recognition from a permutation") {
  Field f9(3, 2);
  USpace u{&f9, 1};
  SemilinearMap m = SemilinearMap::scalar(f9, 1, f9.omega_code());
  m.frob = 1;
  auto rec = semilinear_from_perm(u, m.to_perm(u));
  REQUIRE(rec.has_value());
  CHECK(*rec == m);
  // a non-semilinear permutation is rejected
  Perm bad = Perm::identity(9);
  std::swap(bad.img[3], bad.img[4]);
  CHECK(!semilinear_from_perm(u, bad).has_value());
}

TEST_CASE("pi, theta, alpha projections") {
  GroupTable h = elementary_abelian_group(7, 1);
  auto [x, y] = make_x_y(h);
  StabilizerProjection pr = pi_theta(h, x);
  CHECK(pr.theta == Perm({1, 2, 0}));
  CHECK(pr.pi.is_identity());
  Perm sigma({0, 2, 4, 6, 1, 3, 5});  // h -> 2h mod 7
  StabilizerProjection pd = pi_theta(h, diagonal(sigma));
  CHECK(pd.pi == sigma);
  CHECK(pd.theta.is_identity());
  // alpha is read off the stored exponent
  Field f9(3, 2);
  SemilinearMap m = SemilinearMap::frobenius(f9, 1, 1);
  CHECK(canonical_exponent(m.frob, f9.d()) == 1);
  // a translation is not in the stabilizer
  CHECK_THROWS_AS(pi_theta(h, translation_add(h, 1, 0)), NotInStabilizer);
}

TEST_CASE("transitivity checks") {
  Field f7(7, 1);
  USpace u7{&f7, 1};
  CHECK(is_transitive_on_nonzero({SemilinearMap::scalar(f7, 1, f7.omega_code())},
                                 u7));
  // squares of GF(7): orbit of 1 has size 3
  SemilinearMap sq = SemilinearMap::scalar(
      f7, 1, f7.mul(f7.omega_code(), f7.omega_code()));
  CHECK(!is_transitive_on_nonzero({sq}, u7));
  Field f8(2, 3);
  USpace u8{&f8, 1};
  CHECK(is_transitive_on_nonzero({SemilinearMap::scalar(f8, 1, f8.omega_code()),
                                  SemilinearMap::frobenius(f8, 1, 1)},
                                 u8));
}

TEST_CASE("GL_n(q) generators") {
  Field f2(2, 1);
  USpace u{&f2, 2};
  auto gens = gl_generators(f2, 2);
  auto grp = close_group<SemilinearMap, SemilinearHash>(
      gens, SemilinearMap::identity(f2, 2), 100, SemilinearHash());
  CHECK(grp.size() == 6);  // GL_2(2)
  CHECK(is_transitive_on_nonzero(gens, u));
  Field f3(3, 1);
  auto grp3 = close_group<SemilinearMap, SemilinearHash>(
      gl_generators(f3, 2), SemilinearMap::identity(f3, 2), 100,
      SemilinearHash());
  CHECK(grp3.size() == 48);  // GL_2(3)
}

TEST_CASE("build_G0 examples") {
  GroupTable h3 = elementary_abelian_group(3, 1);
  Field f3(3, 1);
  ValidatedSpec vs1 = validate_spec(canonical_line1(f3, 1));
  auto g01 = build_G0(vs1, h3);
  CHECK(g01.size() == 6);  // 2 * 3
  for (const Autoparatopism& e : g01) {
    std::array<int, 3> base{0, 0, 0};
    CHECK(e.apply(base) == base);
  }

  // line 2 over GF(8): g = Frobenius, g^3 = identity lies in K
  Field f8(2, 3);
  ValidatedSpec vs2 = validate_spec(canonical_line2(f8, 3, 1));
  CHECK(vs2.i == 1);
  CHECK(vs2.ell == 3);
  CHECK(vs2.m == 1);
  GroupTable h8 = elementary_abelian_group(2, 3);
  auto g02 = build_G0(vs2, h8);
  CHECK(g02.size() == 21);  // |K| * |<x>| = 7 * 3

  // line 4 over GF(7): K = squares, h a nonsquare scalar; h^2 is a square
  Field f7(7, 1);
  ValidatedSpec vs4 = validate_spec(canonical_line4(f7, 1, 1));
  GroupTable h7 = elementary_abelian_group(7, 1);
  auto g04 = build_G0(vs4, h7);
  CHECK(g04.size() == 18);  // |K| * 6 = 3 * 6
}

TEST_CASE("G0 order divides |GammaL_1(q)| * 6") {
  Field f8(2, 3);
  GroupTable h8 = elementary_abelian_group(2, 3);
  auto g0 = build_G0(validate_spec(canonical_line3(f8, 1)), h8);
  long long gamma_l = 7 * 3;  // (q-1) * d
  CHECK((gamma_l * 6) % g0.size() == 0);
}

TEST_CASE("goursat and transitivity violations") {
  Field f8(2, 3);
  // line 2 with g = tau but K lacking the needed closure: ell = 1 puts tau
  // in K already
  CHECK_THROWS_AS(validate_spec(canonical_line2(f8, 1, 1)), GoursatViolation);
  // line 1 with K = squares of GF(7) is intransitive
  Field f7(7, 1);
  StabilizerSpec bad;
  bad.line = 1;
  bad.f = &f7;
  bad.n = 1;
  bad.k_gens.push_back(SemilinearMap::scalar(
      f7, 1, f7.mul(f7.omega_code(), f7.omega_code())));
  CHECK_THROWS_AS(validate_spec(bad), NotTransitive);
  // line 5 with commuting g, h fails Kgh = Khg^2; the message names the
  // composition convention
  Field f64(2, 6, 100000);
  StabilizerSpec l5;
  l5.line = 5;
  l5.f = &f64;
  l5.n = 1;
  l5.k_gens.push_back(SemilinearMap::scalar(f64, 1, f64.omega_code()));
  l5.g = SemilinearMap::frobenius(f64, 1, 2);
  l5.h = SemilinearMap::frobenius(f64, 1, 3);
  try {
    validate_spec(l5);
    CHECK(false);
  } catch (const GoursatViolation& e) {
    CHECK(std::string(e.what()).find("convention") != std::string::npos);
  }
  // line mismatches
  StabilizerSpec wrong = canonical_line1(f7, 1);
  wrong.g = SemilinearMap::identity(f7, 1);
  CHECK_THROWS_AS(validate_spec(wrong), SpecLineMismatch);
}
