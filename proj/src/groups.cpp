#include "su2cert/groups.hpp"

#include <algorithm>
#include <sstream>

#include "su2cert/cyclotomic.hpp"
#include "su2cert/intmath.hpp"

namespace su2cert {

FiniteAbelianGroup FiniteAbelianGroup::from_invariant_factors(std::vector<Integer> factors) {
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2)
      throw std::invalid_argument("FiniteAbelianGroup: invariant factors must be >= 2");
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
      throw std::invalid_argument("FiniteAbelianGroup: divisibility chain violated");
  }
  FiniteAbelianGroup g;
  g.factors_ = std::move(factors);
  return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_factors(const std::vector<Integer>& orders) {
  // Split into prime powers, then rebuild the chain by taking, at each step,
  // the largest remaining power of each prime.
  std::map<Integer, std::vector<Integer>> powers;  // prime -> exponent list
  for (Integer n : orders) {
    if (n < 1) throw std::invalid_argument("FiniteAbelianGroup: nonpositive factor");
    if (n == 1) continue;
    Integer p = 2;
    while (p * p <= n) {
      if (n % p == 0) {
        Integer pk = 1;
        while (n % p == 0) {
          n /= p;
          pk *= p;
        }
        powers[p].push_back(pk);
      }
      p += 1;
    }
    if (n > 1) powers[n].push_back(n);
  }
  size_t depth = 0;
  for (auto& [p, list] : powers) {
    std::sort(list.begin(), list.end(), std::greater<Integer>());
    depth = std::max(depth, list.size());
  }
  std::vector<Integer> factors(depth, Integer(1));
  for (auto& [p, list] : powers)
    for (size_t i = 0; i < list.size(); ++i) factors[i] *= list[i];
  // factors[0] is the largest; reverse into ascending divisibility order.
  std::reverse(factors.begin(), factors.end());
  FiniteAbelianGroup g;
  g.factors_ = std::move(factors);
  return g;
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(const Integer& n) {
  if (n < 1) throw std::invalid_argument("FiniteAbelianGroup: nonpositive order");
  FiniteAbelianGroup g;
  if (n > 1) g.factors_.push_back(n);
  return g;
}

Integer FiniteAbelianGroup::order() const {
  Integer out = 1;
  for (const auto& d : factors_) out *= d;
  return out;
}

Integer FiniteAbelianGroup::two_torsion_count() const {
  Integer out = 1;
  for (const auto& d : factors_) out *= gcd(d, Integer(2));
  return out;
}

std::string FiniteAbelianGroup::str() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " + ";
    os << "Z/" << factors_[i];
  }
  return os.str();
}

ReducibleCount reducible_classes(const FiniteAbelianGroup& h) {
  Integer order = h.order();
  Integer t = h.two_torsion_count();
  return {t + (order - t) / 2, order};
}

BoyerNicasResult boyer_nicas_dim(long n, const std::map<long, Integer>& b1) {
  if (n < 2) throw std::invalid_argument("boyer_nicas_dim: n must be >= 2");
  BoyerNicasResult out{Rational(0), {}};
  Integer bn;
  {
    auto it = b1.find(n);
    if (it == b1.end()) throw std::invalid_argument("boyer_nicas_dim: missing b1 at n");
    bn = it->second;
  }
  Integer acc = 0;
  for (long d : divisors(n)) {
    auto it = b1.find(d);
    if (it == b1.end())
      throw std::invalid_argument("boyer_nicas_dim: b1 missing at divisor " +
                                  std::to_string(d));
    if (it->second < 0) throw std::invalid_argument("boyer_nicas_dim: negative b1");
    if (it->second > bn)
      out.warnings.push_back("transfer monotonicity violated: b1(" + std::to_string(d) +
                             ") exceeds b1(" + std::to_string(n) + ")");
    acc += Integer(mobius(n / d)) * it->second;
  }
  out.value = Rational(2) * Rational(acc) / Rational(euler_phi(n));
  if (out.value < Rational(0))
    throw std::invalid_argument("boyer_nicas_dim: negative dimension (inconsistent b1 data)");
  if (!out.value.is_integer())
    throw std::invalid_argument("boyer_nicas_dim: fractional dimension (inconsistent b1 data)");
  return out;
}

long tangent_dim(long dim_centralizer, long dim_h1) {
  if (dim_centralizer != 1 && dim_centralizer != 3)
    throw std::invalid_argument("tangent_dim: centralizer dimension must be 1 or 3");
  if (dim_h1 < 0) throw std::invalid_argument("tangent_dim: negative h1");
  return 3 - dim_centralizer + dim_h1;
}

bool small_h1_cyclic_finite(const FiniteAbelianGroup& h) {
  if (h.is_trivial()) return true;
  if (h.is_cyclic() && is_prime_power(h.order())) return true;
  if (h.invariant_factors() == std::vector<Integer>{2, 2}) return true;
  return h.order() <= 5;
}

bool cyclically_finite_surgery(const RatPoly& alexander, const Integer& p) {
  if (p == 0) throw std::invalid_argument("cyclically_finite_surgery: p must be nonzero");
  if (alexander.is_zero())
    throw std::invalid_argument("cyclically_finite_surgery: zero polynomial");
  Integer ap = abs(p);
  if (!ap.fits_slong_p())
    throw std::invalid_argument("cyclically_finite_surgery: |p| out of range");
  return !pth_root_zero(alexander.substitute_power(2), ap.get_si());
}

}  // namespace su2cert
