#include "lsgq/intutil.hpp"

#include <algorithm>

#include "lsgq/errors.hpp"

namespace lsgq {

long long gcd_ll(long long a, long long b) {
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

long long ipow(long long a, int e) {
  long long r = 1;
  const long long limit = (1LL << 62);
  for (int k = 0; k < e; ++k) {
    if (a != 0 && r > limit / (a < 0 ? -a : a))
      throw ArgumentOutOfRange("ipow: overflow past 2^62");
    r *= a;
  }
  return r;
}

int128 ipow128(int128 a, int e) {
  int128 r = 1;
  const int128 limit = int128(1) << 126;
  int128 aa = a < 0 ? -a : a;
  for (int k = 0; k < e; ++k) {
    if (aa != 0 && r > limit / aa)
      throw ArgumentOutOfRange("ipow128: overflow past 2^126");
    r *= a;
  }
  return r;
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  if (neg) v = -v;
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace lsgq
