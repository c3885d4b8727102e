#include "lsgq/stabilizer.hpp"

#include <algorithm>
#include <unordered_set>

#include "lsgq/errors.hpp"
#include "lsgq/intutil.hpp"

namespace lsgq {

namespace {

bool contains(const std::vector<SemilinearMap>& set, const SemilinearMap& m) {
  return std::find(set.begin(), set.end(), m) != set.end();
}

void record(ValidatedSpec& vs, const std::string& name, bool value) {
  vs.checks.emplace_back(name, value ? "ok" : "FAILED");
}

}  // namespace

bool is_transitive_on_nonzero(const std::vector<SemilinearMap>& gens,
                              const USpace& u) {
  const long long size = u.size();
  if (size <= 1) return true;
  std::vector<char> seen(size, 0);
  std::vector<long long> stack{1};
  seen[1] = 1;
  long long count = 1;
  while (!stack.empty()) {
    long long v = stack.back();
    stack.pop_back();
    for (const SemilinearMap& g : gens) {
      long long w = g.apply_enc(u, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == size - 1;
}

ValidatedSpec validate_spec(const StabilizerSpec& spec, size_t max_group) {
  if (spec.line < 1 || spec.line > 5)
    throw SpecLineMismatch("stabilizer line must be 1..5");
  const bool needs_g = spec.line == 2 || spec.line == 5;
  const bool needs_h = spec.line == 4 || spec.line == 5;
  if (needs_g != spec.g.has_value())
    throw SpecLineMismatch("line " + std::to_string(spec.line) +
                           (needs_g ? " requires g" : " takes no g"));
  if (needs_h != spec.h.has_value())
    throw SpecLineMismatch("line " + std::to_string(spec.line) +
                           (needs_h ? " requires h" : " takes no h"));
  if (spec.k_gens.empty())
    throw SpecLineMismatch("stabilizer spec needs at least one K generator");

  ValidatedSpec vs;
  vs.spec = spec;
  vs.u = USpace{spec.f, spec.n};
  const int d = spec.f->d();

  SemilinearMap id = SemilinearMap::identity(*spec.f, spec.n);
  vs.K = close_group<SemilinearMap, SemilinearHash>(spec.k_gens, id, max_group,
                                                    SemilinearHash());
  vs.ell = alpha_subgroup_exponent(vs.K, d);

  // K must be normalized by g and h, otherwise the Goursat coset language
  // does not apply.
  auto check_normalizes = [&](const SemilinearMap& w, const char* who) {
    SemilinearMap wi = w.inverse();
    for (const SemilinearMap& k : spec.k_gens)
      if (!contains(vs.K, wi * k * w))
        throw GoursatViolation(std::string("K is not normalized by ") + who);
  };

  std::vector<SemilinearMap> pi_gens = spec.k_gens;
  if (spec.g) {
    check_normalizes(*spec.g, "g");
    if (contains(vs.K, *spec.g))
      throw GoursatViolation("g lies in K; line " + std::to_string(spec.line) +
                             " needs g outside K");
    SemilinearMap g3 = *spec.g * *spec.g * *spec.g;
    if (!contains(vs.K, g3))
      throw GoursatViolation("Kg^3 = K fails: g^3 is not in K");
    vs.i = canonical_exponent(spec.g->frob, d);
    pi_gens.push_back(*spec.g);
  }
  if (spec.h) {
    check_normalizes(*spec.h, "h");
    if (contains(vs.K, *spec.h))
      throw GoursatViolation("h lies in K; line " + std::to_string(spec.line) +
                             " needs h outside K");
    SemilinearMap h2 = *spec.h * *spec.h;
    if (!contains(vs.K, h2))
      throw GoursatViolation("Kh^2 = K fails: h^2 is not in K");
    vs.j = canonical_exponent(spec.h->frob, d);
    pi_gens.push_back(*spec.h);
  }
  if (spec.line == 5) {
    // Kgh = Khg^2, i.e. (hg^2)^-1 (gh) in K.  This condition depends on the
    // composition convention (matrix first, then field automorphism;
    // products left-to-right); a pair valid under the opposite convention
    // will fail here.
    SemilinearMap gh = *spec.g * *spec.h;
    SemilinearMap hg2 = *spec.h * *spec.g * *spec.g;
    if (!contains(vs.K, hg2.inverse() * gh))
      throw GoursatViolation(
          "Kgh = Khg^2 fails under this library's composition convention "
          "(apply matrix, then automorphism; products compose left to "
          "right); if the pair was built for the opposite convention, "
          "swap the twist side accordingly");
  }
  vs.m = vs.i > 0 ? int(gcd_ll(vs.i, vs.ell)) : 0;

  vs.pi_grp = close_group<SemilinearMap, SemilinearHash>(pi_gens, id,
                                                         max_group,
                                                         SemilinearHash());

  // Transitivity column of the table: K for lines 1-3, <K, h> for 4-5.
  bool trans;
  if (spec.line <= 3) {
    trans = is_transitive_on_nonzero(vs.K, vs.u);
    if (!trans) throw NotTransitive("K is not transitive on U^#");
  } else {
    std::vector<SemilinearMap> kh = spec.k_gens;
    kh.push_back(*spec.h);
    trans = is_transitive_on_nonzero(kh, vs.u);
    if (!trans) throw NotTransitive("<K, h> is not transitive on U^#");
  }
  record(vs, "transitive_on_H#", trans);
  record(vs, "goursat_line_" + std::to_string(spec.line), true);
  return vs;
}

std::vector<Autoparatopism> g0_generators(const ValidatedSpec& vs,
                                          const GroupTable& h_table) {
  if (h_table.n != vs.u.size())
    throw ArgumentOutOfRange("g0_generators: H order mismatch with U");
  auto [x, y] = make_x_y(h_table);
  std::vector<Autoparatopism> gens;
  for (const SemilinearMap& k : vs.spec.k_gens)
    gens.push_back(diagonal(k.to_perm(vs.u)));
  const int line = vs.spec.line;
  if (line == 1 || line == 3 || line == 4) gens.push_back(x);
  if (line == 2 || line == 5)
    gens.push_back(diagonal(vs.spec.g->to_perm(vs.u)) * x);
  if (line == 3) gens.push_back(y);
  if (line == 4 || line == 5)
    gens.push_back(diagonal(vs.spec.h->to_perm(vs.u)) * y);
  return gens;
}

std::vector<Autoparatopism> build_G0(const ValidatedSpec& vs,
                                     const GroupTable& h_table,
                                     size_t max_group) {
  std::vector<Autoparatopism> gens = g0_generators(vs, h_table);
  for (const Autoparatopism& g : gens) {
    if (!preserves_cayley_table(h_table, g))
      throw Error("build_G0: generator does not preserve the Cayley table");
    std::array<int, 3> base{0, 0, 0};
    if (g.apply(base) != base)
      throw Error("build_G0: generator moves the base cell (0,0,0)");
  }
  std::vector<Autoparatopism> grp = close_group<Autoparatopism,
                                                AutoparatopismHash>(
      gens, Autoparatopism::identity(h_table.n), max_group,
      AutoparatopismHash());

  // pi(G0) must equal the closed <K, g, h> and theta(G0) must be <x> for
  // lines 1-2, <x, y> for lines 3-5.
  std::unordered_set<Perm, PermHash> pi_expected;
  for (const SemilinearMap& s : vs.pi_grp) pi_expected.insert(s.to_perm(vs.u));
  std::unordered_set<Perm, PermHash> theta_seen;
  for (const Autoparatopism& e : grp) {
    StabilizerProjection pr = pi_theta(h_table, e);
    if (!pi_expected.count(pr.pi))
      throw Error("build_G0: pi projection escapes <K, g, h>");
    theta_seen.insert(pr.theta);
  }
  size_t want_theta = vs.spec.line <= 2 ? 3 : 6;
  if (theta_seen.size() != want_theta)
    throw Error("build_G0: theta projection has wrong order");
  return grp;
}

StabilizerSpec canonical_line1(const Field& f, int ell) {
  StabilizerSpec s;
  s.line = 1;
  s.f = &f;
  s.n = 1;
  s.k_gens.push_back(SemilinearMap::scalar(f, 1, f.omega_code()));
  if (ell % f.d() != 0)
    s.k_gens.push_back(SemilinearMap::frobenius(f, 1, ell));
  return s;
}

StabilizerSpec canonical_line2(const Field& f, int ell, int i) {
  StabilizerSpec s = canonical_line1(f, ell);
  s.line = 2;
  s.g = SemilinearMap::frobenius(f, 1, i);
  return s;
}

StabilizerSpec canonical_line3(const Field& f, int ell) {
  StabilizerSpec s = canonical_line1(f, ell);
  s.line = 3;
  return s;
}

StabilizerSpec canonical_line4(const Field& f, int ell, int j) {
  if (f.p() == 2)
    throw NotTransitive(
        "line 4 over characteristic 2: squares are all of F_q^#, no "
        "nonsquare h exists");
  StabilizerSpec s;
  s.line = 4;
  s.f = &f;
  s.n = 1;
  s.k_gens.push_back(
      SemilinearMap::scalar(f, 1, f.mul(f.omega_code(), f.omega_code())));
  if (ell % f.d() != 0)
    s.k_gens.push_back(SemilinearMap::frobenius(f, 1, ell));
  SemilinearMap h = SemilinearMap::scalar(f, 1, f.omega_code());
  h.frob = int(((j % f.d()) + f.d()) % f.d());
  s.h = h;
  return s;
}

std::vector<SemilinearMap> gl_generators(const Field& f, int n) {
  std::vector<SemilinearMap> gens;
  gens.push_back(SemilinearMap::scalar(f, n, f.omega_code()));
  if (n == 1) return gens;
  // n-cycle permutation matrix
  std::vector<long long> cyc(n * n, 0);
  for (int r = 0; r < n; ++r) cyc[r * n + (r + 1) % n] = 1;
  gens.push_back(SemilinearMap::from_matrix(f, n, cyc));
  // transvection I + E_{01}
  std::vector<long long> tv(n * n, 0);
  for (int r = 0; r < n; ++r) tv[r * n + r] = 1;
  tv[0 * n + 1] = 1;
  gens.push_back(SemilinearMap::from_matrix(f, n, tv));
  // diag(omega, 1, ..., 1)
  std::vector<long long> dia(n * n, 0);
  for (int r = 0; r < n; ++r) dia[r * n + r] = (r == 0) ? f.omega_code() : 1;
  gens.push_back(SemilinearMap::from_matrix(f, n, dia));
  return gens;
}

}  // namespace lsgq
