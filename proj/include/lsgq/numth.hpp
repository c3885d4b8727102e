#ifndef LSGQ_NUMTH_HPP
#define LSGQ_NUMTH_HPP

#include <string>

#include "lsgq/intutil.hpp"

namespace lsgq {

enum class GcdPart { MinusPlus, MinusTri, PlusTri };

/// One evaluation of a closed-form gcd identity.  `value` divides both
/// operands of the pair.  `stated_mismatch` marks triples where the
/// identity's published case condition disagrees with the form actually
/// proved (and verified by the oracle); see gcd_minus_tri.
struct GcdCase {
  long long a = 0, r = 0, s = 0;
  GcdPart part = GcdPart::MinusPlus;
  int128 value = 0;
  std::string branch;
  bool stated_mismatch = false;
};

/// gcd(a^r - 1, a^s + 1):
///   a^(r,s) + 1  if r/(r,s) even;  2  if r/(r,s) odd and a odd;  1 otherwise.
GcdCase gcd_minus_plus(long long a, long long r, long long s);

/// gcd(a^r - 1, a^(2s) + a^s + 1):
///   a^(2(r,s)) + a^(r,s) + 1  if 3 | r/(r,s);
///   3  if 3 does not divide r/(r,s) and (a = 1 mod 3, or a = 2 mod 3 with
///      r, s both even);
///   1  otherwise.
/// The first case is often quoted with the extra condition "s/(r,s) even";
/// the derivation needs no such condition and the Euclidean oracle rejects
/// it (e.g. a=2, r=6, s=2 gives 21).  Such triples carry stated_mismatch.
GcdCase gcd_minus_tri(long long a, long long r, long long s);

/// gcd(a^r + 1, a^(2s) + a^s + 1):
///   a^(2(r,s)) - a^(r,s) + 1  if 3 | r/(r,s) and s/(r,s) even;
///   3  if 3 does not divide r/(r,s), s/(r,s) even, r odd, a = 2 mod 3;
///   1  otherwise.
GcdCase gcd_plus_tri(long long a, long long r, long long s);

/// Literal 128-bit evaluation of the named pair followed by Euclid's
/// algorithm.  Independent of the closed forms above.
int128 gcd_oracle(GcdPart part, long long a, long long r, long long s);

}  // namespace lsgq

#endif
