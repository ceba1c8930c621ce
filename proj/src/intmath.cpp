#include "su2cert/intmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace su2cert {

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<long> out{1};
  for (auto [p, e] : factorize(n)) {
    size_t base = out.size();
    long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  long phi = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    phi -= phi / p;
  }
  return phi;
}

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime_power(const Integer& n) {
  if (n < 2) return false;
  Integer m = n;
  Integer p = 2;
  while (p * p <= m) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      return m == 1;
    }
    p += 1;
  }
  return true;  // m itself prime
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Integer falling_factorial(long n, long k) {
  Integer out = 1;
  for (long i = 0; i < k; ++i) out *= (n - i);
  return out;
}

}  // namespace su2cert
