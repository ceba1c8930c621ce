#pragma once

#include <utility>
#include <vector>

#include "su2cert/rational.hpp"

namespace su2cert {

/// Prime factorization by trial division, as (prime, exponent) pairs. n >= 1.
std::vector<std::pair<long, int>> factorize(long n);

/// All positive divisors of n >= 1, ascending.
std::vector<long> divisors(long n);

/// Moebius function; mobius(0) is an error.
int mobius(long n);

/// Euler totient; euler_phi(0) is an error.
long euler_phi(long n);

long gcd_long(long a, long b);

bool is_prime_power(const Integer& n);  // n >= 2 of the form p^e

Integer binomial(long n, long k);
Integer falling_factorial(long n, long k);  // n(n-1)...(n-k+1)

}  // namespace su2cert
