#ifndef LSGQ_STABILIZER_HPP
#define LSGQ_STABILIZER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsgq/autopara.hpp"
#include "lsgq/semilinear.hpp"

namespace lsgq {

/// A vertex-stabilizer subgroup shape.  The five lines are
///   1: <K, x>          2: <K, gx>          3: <K, x, y>
///   4: <K, x, hy>      5: <K, gx, hy>
/// with K a set of semilinear generators on U = F_q^n, embedded diagonally,
/// and g, h semilinear maps outside K subject to the coset conditions
/// Kg^3 = K (lines 2, 5), Kh^2 = K (lines 4, 5) and Kgh = Khg^2 (line 5).
/// K must be transitive on U^# for lines 1-3 and <K, h> transitive for
/// lines 4-5.
struct StabilizerSpec {
  int line = 1;
  const Field* f = nullptr;  // F_q
  int n = 1;
  std::vector<SemilinearMap> k_gens;
  std::optional<SemilinearMap> g, h;
};

/// Spec with its derived data after all conditions were checked.
struct ValidatedSpec {
  StabilizerSpec spec;
  USpace u;
  std::vector<SemilinearMap> K;        // closure of k_gens
  std::vector<SemilinearMap> pi_grp;   // closure of <K, g, h> per the line
  int ell = 0;                         // alpha(K) = <tau^ell>, in [1, d]
  int i = 0;                           // alpha(g) = tau^i (0 when no g)
  int j = 0;                           // alpha(h) = tau^j (0 when no h)
  int m = 0;                           // gcd(i, ell) (0 when no g)
  std::vector<std::pair<std::string, std::string>> checks;
};

/// Checks Goursat coset conditions and the transitivity column; throws
/// GoursatViolation / NotTransitive / SpecLineMismatch.
ValidatedSpec validate_spec(const StabilizerSpec& spec,
                            size_t max_group = 1000000);

/// Orbit test for semilinear generators: the orbit of one nonzero vector is
/// all of U^#.
bool is_transitive_on_nonzero(const std::vector<SemilinearMap>& gens,
                              const USpace& u);

/// Generators of G_0 as autoparatopisms of the Cayley table of H (the
/// additive group of U, which must use the same integer encoding).
std::vector<Autoparatopism> g0_generators(const ValidatedSpec& vs,
                                          const GroupTable& h_table);

/// Full closure of g0_generators; verifies that the pi- and theta-
/// projections match the line and that every element fixes (0,0,0).
std::vector<Autoparatopism> build_G0(const ValidatedSpec& vs,
                                     const GroupTable& h_table,
                                     size_t max_group = 1000000);

// Canonical families over U = F_q (n = 1).
StabilizerSpec canonical_line1(const Field& f, int ell);
StabilizerSpec canonical_line2(const Field& f, int ell, int i);
StabilizerSpec canonical_line3(const Field& f, int ell);
/// h = omega * tau^j (a nonsquare scalar twisted by tau^j); p must be odd.
StabilizerSpec canonical_line4(const Field& f, int ell, int j);

/// Generators of GL_n(q) (scalar+cycle+transvection); n = 1 gives {omega}.
std::vector<SemilinearMap> gl_generators(const Field& f, int n);

}  // namespace lsgq

#endif
