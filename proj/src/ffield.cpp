#include "lsgq/ffield.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lsgq/errors.hpp"
#include "lsgq/intutil.hpp"

namespace lsgq {

namespace {

// Dense polynomial helpers over GF(p); vectors are coefficient lists,
// low degree first, not necessarily normalized.

int poly_deg(const std::vector<int>& a) {
  for (int k = int(a.size()) - 1; k >= 0; --k)
    if (a[k] != 0) return k;
  return -1;
}

// a mod b, b monic of positive degree.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b,
                          long long p) {
  int db = poly_deg(b);
  for (int k = poly_deg(a); k >= db; k = poly_deg(a)) {
    long long c = a[k];
    for (int t = 0; t <= db; ++t) {
      long long v = a[k - db + t] - c * b[t] % p;
      a[k - db + t] = int(((v % p) + p) % p);
    }
  }
  a.resize(std::max(db, 1));
  return a;
}

bool poly_divides(const std::vector<int>& g, const std::vector<int>& f,
                  long long p) {
  return poly_deg(poly_mod(f, g, p)) < 0;
}

// Trial division against all monic polynomials of degree <= deg(f)/2.
bool poly_irreducible(const std::vector<int>& f, long long p) {
  int d = poly_deg(f);
  if (d <= 1) return d == 1;
  for (int k = 1; 2 * k <= d; ++k) {
    std::vector<int> g(k + 1, 0);
    g[k] = 1;
    long long count = 1;
    for (int t = 0; t < k; ++t) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      long long v = idx;
      for (int t = 0; t < k; ++t) {
        g[t] = int(v % p);
        v /= p;
      }
      if (poly_divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(long long p, int d, long long max_order) : p_(p), d_(d) {
  if (!is_prime(p)) throw NonPrime("make_field: p = " + std::to_string(p));
  if (d < 1) throw DegreeOutOfRange("make_field: d = " + std::to_string(d));
  q_ = 1;
  for (int k = 0; k < d; ++k) {
    q_ *= p;
    if (q_ > max_order)
      throw BoundExceeded("make_field: p^d exceeds bound " +
                          std::to_string(max_order));
  }
  // Smallest monic primitive polynomial, coefficient lists compared
  // low-degree first (c0 is the most significant position).
  std::vector<int> cand(d + 1, 0);
  cand[d] = 1;
  bool found = false;
  for (long long idx = 0; idx < q_ && !found; ++idx) {
    // Read idx as (c0, c1, ..., c_{d-1}) base p with c0 most significant,
    // so candidates appear in increasing low-degree-first lex order.
    long long w = idx;
    for (int t = d - 1; t >= 0; --t) {
      cand[t] = int(w % p);
      w /= p;
    }
    if (!poly_irreducible(cand, p)) continue;
    modulus_ = cand;
    init_tables();
    omega_ = (d == 1) ? ((p - modulus_[0]) % p) : p;
    // Primitivity of x: order must be exactly q-1.
    if (omega_ == 0) continue;
    bool primitive = (pow(omega_, q_ - 1) == 1);
    if (primitive)
      for (long long r : prime_factors(q_ - 1))
        if (pow(omega_, (q_ - 1) / r) == 1) {
          primitive = false;
          break;
        }
    if (primitive) found = true;
  }
  if (!found)
    throw Error("make_field: no primitive polynomial found (internal)");
  build_fast_tables();
}

Field::Field(long long p, int d, const std::vector<int>& modulus,
             long long max_order)
    : p_(p), d_(d) {
  if (!is_prime(p)) throw NonPrime("make_field: p = " + std::to_string(p));
  if (d < 1) throw DegreeOutOfRange("make_field: d = " + std::to_string(d));
  q_ = 1;
  for (int k = 0; k < d; ++k) {
    q_ *= p;
    if (q_ > max_order)
      throw BoundExceeded("make_field: p^d exceeds bound " +
                          std::to_string(max_order));
  }
  if (int(modulus.size()) != d + 1 || modulus[d] != 1)
    throw ArgumentOutOfRange("field modulus override: need monic degree-d "
                             "coefficient list c0..cd");
  for (int c : modulus)
    if (c < 0 || c >= p)
      throw ArgumentOutOfRange("field modulus override: coefficient out of "
                               "range [0,p)");
  if (!poly_irreducible(modulus, p))
    throw ArgumentOutOfRange("field modulus override: polynomial reducible");
  modulus_ = modulus;
  init_tables();
  omega_ = (d == 1) ? ((p - modulus_[0]) % p) : p;
  bool primitive = omega_ != 0 && pow(omega_, q_ - 1) == 1;
  if (primitive)
    for (long long r : prime_factors(q_ - 1))
      if (pow(omega_, (q_ - 1) / r) == 1) primitive = false;
  if (!primitive)
    throw ArgumentOutOfRange(
        "field modulus override: x is not a primitive root, element labels "
        "would not be reproducible");
  build_fast_tables();
}

void Field::init_tables() {
  // red_[k] = x^(d+k) mod modulus, as a length-d digit vector.
  red_.assign(d_ > 1 ? d_ - 1 : 0, std::vector<int>(d_, 0));
  std::vector<int> cur(d_, 0);
  // x^d = -c0 - c1 x - ... - c_{d-1} x^{d-1}
  std::vector<int> xd(d_);
  for (int t = 0; t < d_; ++t) xd[t] = int((p_ - modulus_[t]) % p_);
  cur = xd;
  for (int k = 0; k + 1 < d_; ++k) {
    red_[k] = cur;
    // multiply cur by x and reduce
    std::vector<int> nxt(d_, 0);
    int carry = cur[d_ - 1];
    for (int t = d_ - 1; t >= 1; --t) nxt[t] = cur[t - 1];
    nxt[0] = 0;
    if (carry != 0)
      for (int t = 0; t < d_; ++t)
        nxt[t] = int((nxt[t] + 1LL * carry * xd[t]) % p_);
    cur = nxt;
  }
}

FieldElement Field::omega() const { return {this, omega_}; }
FieldElement Field::zero() const { return {this, 0}; }
FieldElement Field::one() const { return {this, 1}; }

FieldElement Field::element(long long code) const {
  if (code < 0 || code >= q_)
    throw ArgumentOutOfRange("Field::element: code out of range");
  return {this, code};
}

FieldElement Field::from_residue(long long r) const {
  long long m = ((r % p_) + p_) % p_;
  return {this, m};
}

std::vector<int> Field::coeffs(long long a) const {
  std::vector<int> c(d_);
  for (int t = 0; t < d_; ++t) {
    c[t] = int(a % p_);
    a /= p_;
  }
  return c;
}

long long Field::code_of_coeffs(const std::vector<int>& c) const {
  long long a = 0;
  for (int t = d_ - 1; t >= 0; --t) a = a * p_ + c[t];
  return a;
}

void Field::build_fast_tables() {
  if (q_ > kTableLimit) return;
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  inv_tab_.assign(q_, 0);
  frob1_.assign(q_, 0);
  long long acc = 1;
  for (long long k = 0; k < q_ - 1; ++k) {
    exp_[k] = int32_t(acc);
    log_[acc] = int32_t(k);
    acc = mul_generic(acc, omega_);
  }
  for (long long k = 0; k < q_ - 1; ++k)
    inv_tab_[exp_[k]] = exp_[(q_ - 1 - k) % (q_ - 1)];
  for (long long c = 0; c < q_; ++c) frob1_[c] = int32_t(pow_generic(c, p_));
  fast_ = true;
}

long long Field::add(long long a, long long b) const {
  if (p_ == 2) return a ^ b;
  long long r = 0, mult = 1;
  for (int t = 0; t < d_; ++t) {
    r += ((a % p_) + (b % p_)) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

long long Field::neg(long long a) const {
  if (p_ == 2) return a;
  long long r = 0, mult = 1;
  for (int t = 0; t < d_; ++t) {
    r += ((p_ - a % p_) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

long long Field::sub(long long a, long long b) const { return add(a, neg(b)); }

long long Field::mul(long long a, long long b) const {
  if (a == 0 || b == 0) return 0;
  if (fast_) return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  return mul_generic(a, b);
}

long long Field::mul_generic(long long a, long long b) const {
  if (a == 0 || b == 0) return 0;
  std::vector<long long> prod(2 * d_ - 1, 0);
  std::vector<int> ca = coeffs(a), cb = coeffs(b);
  for (int s = 0; s < d_; ++s) {
    if (ca[s] == 0) continue;
    for (int t = 0; t < d_; ++t)
      prod[s + t] = (prod[s + t] + 1LL * ca[s] * cb[t]) % p_;
  }
  std::vector<long long> acc(d_, 0);
  for (int t = 0; t < d_; ++t) acc[t] = prod[t];
  for (int k = d_; k < 2 * d_ - 1; ++k) {
    if (prod[k] == 0) continue;
    const std::vector<int>& r = red_[k - d_];
    for (int t = 0; t < d_; ++t) acc[t] = (acc[t] + prod[k] * r[t]) % p_;
  }
  long long code = 0;
  for (int t = d_ - 1; t >= 0; --t) code = code * p_ + acc[t];
  return code;
}

long long Field::pow(long long a, long long e) const {
  if (fast_) {
    if (a == 0) {
      if (e == 0) return 1;
      if (e < 0) throw ZeroElement("Field::pow of 0 to a negative power");
      return 0;
    }
    long long emod = ((e % (q_ - 1)) + (q_ - 1)) % (q_ - 1);
    return exp_[(static_cast<long long>(log_[a]) * emod) % (q_ - 1)];
  }
  return pow_generic(a, e);
}

long long Field::pow_generic(long long a, long long e) const {
  if (e < 0) {
    if (a == 0) throw ZeroElement("Field::pow of 0 to a negative power");
    a = pow_generic(a, q_ - 2);
    e = -e;
  }
  long long r = 1;
  while (e > 0) {
    if (e & 1) r = mul_generic(r, a);
    a = mul_generic(a, a);
    e >>= 1;
  }
  return r;
}

long long Field::inv(long long a) const {
  if (a == 0) throw ZeroElement("Field::inv of 0");
  if (fast_) return inv_tab_[a];
  return pow_generic(a, q_ - 2);
}

long long Field::frob(long long a, long long i) const {
  long long k = ((i % d_) + d_) % d_;
  long long r = a;
  if (fast_) {
    for (long long t = 0; t < k; ++t) r = frob1_[r];
    return r;
  }
  for (long long t = 0; t < k; ++t) r = pow_generic(r, p_);
  return r;
}

Field make_field(long long p, int d, long long max_order) {
  return Field(p, d, max_order);
}

int frobenius_order(const Field& f, long long i) {
  if (i < 1) throw ArgumentOutOfRange("frobenius_order: i >= 1 required");
  return int(f.d() / gcd_ll(f.d(), i));
}

std::vector<FieldElement> fix_subfield(const Field& f, long long i) {
  if (i < 1) throw ArgumentOutOfRange("fix_subfield: i >= 1 required");
  std::vector<FieldElement> out;
  for (long long c = 0; c < f.order(); ++c)
    if (f.frob(c, i) == c) out.push_back(f.element(c));
  return out;
}

long long mult_order(const FieldElement& c) {
  if (c.is_zero()) throw ZeroElement("mult_order of 0");
  const Field& f = c.field();
  long long acc = c.code();
  long long m = 1;
  while (acc != 1) {
    acc = f.mul(acc, c.code());
    ++m;
  }
  return m;
}

FieldElement trace(const Field& f, long long sup_exp, long long sub_exp,
                   const FieldElement& b) {
  if (sup_exp < 1 || sub_exp < 1)
    throw ArgumentOutOfRange("trace: exponents must be >= 1");
  long long e_sup = gcd_ll(f.d(), sup_exp);
  long long e_sub = gcd_ll(f.d(), sub_exp);
  if (e_sup % e_sub != 0)
    throw IncompatibleSubfields(
        "trace: Fix(tau^" + std::to_string(sub_exp) + ") is not a subfield of "
        "Fix(tau^" + std::to_string(sup_exp) + ")");
  if (f.frob(b.code(), e_sup) != b.code())
    throw IncompatibleSubfields("trace: element does not lie in the source "
                                "subfield");
  long long r = e_sup / e_sub;
  long long acc = 0;
  long long conj = b.code();
  for (long long t = 0; t < r; ++t) {
    acc = f.add(acc, conj);
    conj = f.frob(conj, e_sub);
  }
  return f.element(acc);
}

ModulusConfig ModulusConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("modulus config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

ModulusConfig ModulusConfig::parse_text(const std::string& text) {
  ModulusConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    long long p;
    int d;
    if (!(ls >> p >> d)) continue;  // blank or comment line
    std::vector<int> coeffs;
    int c;
    while (ls >> c) coeffs.push_back(c);
    if (int(coeffs.size()) != d + 1)
      throw ParseError("modulus config: expected d+1 coefficients in line: " +
                       line);
    cfg.entries_.push_back({{p, d}, coeffs});
  }
  return cfg;
}

std::optional<std::vector<int>> ModulusConfig::lookup(long long p,
                                                      int d) const {
  for (const auto& e : entries_)
    if (e.first.first == p && e.first.second == d) return e.second;
  return std::nullopt;
}

}  // namespace lsgq
