#ifndef LSGQ_INTUTIL_HPP
#define LSGQ_INTUTIL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lsgq {

using int128 = __int128;

long long gcd_ll(long long a, long long b);

// a^e for small arguments; throws ArgumentOutOfRange past 2^62.
long long ipow(long long a, int e);

// a^e over 128 bits; throws ArgumentOutOfRange on overflow past 2^126.
int128 ipow128(int128 a, int e);
int128 gcd128(int128 a, int128 b);

bool is_prime(long long n);

// Prime factorization by trial division, ascending, without multiplicity.
std::vector<long long> prime_factors(long long n);

std::vector<int> divisors(int n);

std::string int128_to_string(int128 v);

}  // namespace lsgq

#endif
