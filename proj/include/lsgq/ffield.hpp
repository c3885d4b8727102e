#ifndef LSGQ_FFIELD_HPP
#define LSGQ_FFIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lsgq {

class FieldElement;

/// Exact arithmetic in GF(p^d).
///
/// Elements are handled as integer codes in [0, p^d): the base-p evaluation
/// of the coefficient vector of the representative polynomial, low degree
/// first.  The modulus is the lexicographically smallest monic primitive
/// polynomial of degree d over GF(p), coefficient lists compared low-degree
/// first, so codes are reproducible across runs.  The primitive element
/// omega is the class of the indeterminate x (for d = 1, the residue -c0).
///
/// A Field is immutable after construction and safe to share across threads.
class Field {
 public:
  static constexpr long long kDefaultMaxOrder = 1000000;

  Field(long long p, int d, long long max_order = kDefaultMaxOrder);

  /// Construct with an explicit modulus (monic, degree d, coefficient list
  /// c0..cd low-degree first).  The modulus must be irreducible and x must
  /// still be a primitive root, otherwise the construction is rejected.
  Field(long long p, int d, const std::vector<int>& modulus,
        long long max_order = kDefaultMaxOrder);

  long long p() const { return p_; }
  int d() const { return d_; }
  long long order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  long long omega_code() const { return omega_; }
  FieldElement omega() const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(long long code) const;
  /// Embedding of the prime field: residue r mod p.
  FieldElement from_residue(long long r) const;

  // Arithmetic on codes.
  long long add(long long a, long long b) const;
  long long sub(long long a, long long b) const;
  long long neg(long long a) const;
  long long mul(long long a, long long b) const;
  long long inv(long long a) const;
  long long pow(long long a, long long e) const;
  /// c |-> c^(p^i); i is reduced mod d.
  long long frob(long long a, long long i) const;

  std::vector<int> coeffs(long long a) const;
  long long code_of_coeffs(const std::vector<int>& c) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && d_ == o.d_ && modulus_ == o.modulus_;
  }

 private:
  void init_tables();
  void build_fast_tables();
  long long mul_generic(long long a, long long b) const;
  long long pow_generic(long long a, long long e) const;

  long long p_ = 0;
  int d_ = 0;
  long long q_ = 0;
  std::vector<int> modulus_;           // length d+1, monic
  std::vector<std::vector<int>> red_;  // x^(d+k) mod modulus, k in [0, d-1)
  long long omega_ = 0;
  // Discrete-log tables for fields up to kTableLimit elements; mul, inv,
  // pow and Frobenius become table lookups.
  static constexpr long long kTableLimit = 200000;
  bool fast_ = false;
  std::vector<int32_t> exp_, log_, inv_tab_, frob1_;
};

/// A value of GF(p^d), tied to its owning Field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field* f, long long code) : f_(f), code_(code) {}

  long long code() const { return code_; }
  const Field& field() const { return *f_; }
  bool is_zero() const { return code_ == 0; }
  std::vector<int> coeffs() const { return f_->coeffs(code_); }

  FieldElement operator+(const FieldElement& o) const {
    return {f_, f_->add(code_, o.code_)};
  }
  FieldElement operator-(const FieldElement& o) const {
    return {f_, f_->sub(code_, o.code_)};
  }
  FieldElement operator*(const FieldElement& o) const {
    return {f_, f_->mul(code_, o.code_)};
  }
  FieldElement operator-() const { return {f_, f_->neg(code_)}; }
  FieldElement inverse() const { return {f_, f_->inv(code_)}; }
  FieldElement pow(long long e) const { return {f_, f_->pow(code_, e)}; }
  FieldElement frobenius(long long i) const { return {f_, f_->frob(code_, i)}; }

  bool operator==(const FieldElement& o) const { return code_ == o.code_; }
  bool operator!=(const FieldElement& o) const { return code_ != o.code_; }
  bool operator<(const FieldElement& o) const { return code_ < o.code_; }

 private:
  const Field* f_ = nullptr;
  long long code_ = 0;
};

/// The automorphism c |-> c^(p^i) of a field; composition adds exponents
/// mod d, so the d of them form a cyclic group.
struct FieldAutomorphism {
  int exponent = 0;  // in [0, d)
  FieldAutomorphism compose(const FieldAutomorphism& o, int d) const {
    return {int((exponent + o.exponent) % d)};
  }
};

Field make_field(long long p, int d,
                 long long max_order = Field::kDefaultMaxOrder);

/// Order of tau_p^i on GF(p^d): d / gcd(d, i).
int frobenius_order(const Field& f, long long i);

/// All c with c^(p^i) = c; exactly p^gcd(d,i) elements.
std::vector<FieldElement> fix_subfield(const Field& f, long long i);

/// Least m >= 1 with c^m = 1 (linear scan); throws ZeroElement on 0.
long long mult_order(const FieldElement& c);

/// Relative trace from E = Fix(tau^sup_exp) to K = Fix(tau^sub_exp):
/// the sum of the conjugates b^(p^(e_K * t)) over the relative degree,
/// where e_E = gcd(d, sup_exp), e_K = gcd(d, sub_exp).  Requires e_K | e_E
/// and b in E.
FieldElement trace(const Field& f, long long sup_exp, long long sub_exp,
                   const FieldElement& b);

/// Optional per-(p,d) modulus overrides: text lines "p d c0 c1 ... cd".
class ModulusConfig {
 public:
  static ModulusConfig parse_file(const std::string& path);
  static ModulusConfig parse_text(const std::string& text);
  std::optional<std::vector<int>> lookup(long long p, int d) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::pair<long long, int>, std::vector<int>>> entries_;
};

}  // namespace lsgq

#endif
