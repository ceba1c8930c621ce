#include "su2cert/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "su2cert/intmath.hpp"

namespace su2cert {

namespace {
std::map<long, RatPoly> g_cyclotomic_cache;
std::mutex g_cyclotomic_mutex;
}  // namespace

RatPoly cyclotomic(long d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: d must be >= 1");
  std::lock_guard<std::mutex> lock(g_cyclotomic_mutex);
  auto it = g_cyclotomic_cache.find(d);
  if (it != g_cyclotomic_cache.end()) return it->second;

  // t^d - 1 = prod_{e | d} Phi_e, so divide out the proper divisors.
  // The cache is filled in increasing order, so recursion terminates.
  std::function<RatPoly(long)> compute = [&](long n) -> RatPoly {
    auto hit = g_cyclotomic_cache.find(n);
    if (hit != g_cyclotomic_cache.end()) return hit->second;
    RatPoly num = RatPoly::monomial(n, Rational(1)) - RatPoly::one();
    for (long e : divisors(n)) {
      if (e == n) continue;
      auto [q, r] = poly_divmod(num, compute(e));
      if (!r.is_zero()) throw std::logic_error("cyclotomic: inexact division");
      num = q;
    }
    g_cyclotomic_cache.emplace(n, num);
    return num;
  };
  return compute(d);
}

std::vector<long> totient_bounded(long bound) {
  std::vector<long> out;
  if (bound < 1) return out;
  // phi(d) >= sqrt(d/2) for all d, so phi(d) <= bound implies d <= 2*bound^2.
  long dmax = 2 * bound * bound + 1;
  for (long d = 1; d <= dmax; ++d)
    if (euler_phi(d) <= bound) out.push_back(d);
  return out;
}

std::optional<long> root_of_unity_zero(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root_of_unity_zero: zero polynomial");
  RatPoly q = clear_to_ordinary(p);
  if (q.is_constant()) return std::nullopt;
  long deg = q.degree();
  for (long d : totient_bounded(deg)) {
    if (divides(cyclotomic(d), q)) return d;
  }
  return std::nullopt;
}

bool pth_root_zero(const RatPoly& poly, long p) {
  if (poly.is_zero()) throw std::invalid_argument("pth_root_zero: zero polynomial");
  if (p < 1) throw std::invalid_argument("pth_root_zero: p must be >= 1");
  RatPoly q = clear_to_ordinary(poly);
  RatPoly tp = RatPoly::monomial(p, Rational(1), q.var()) - RatPoly::one(q.var());
  RatPoly g = poly_gcd(q, tp);
  return !g.is_constant();
}

}  // namespace su2cert
