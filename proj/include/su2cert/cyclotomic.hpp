#pragma once

#include <optional>

#include "su2cert/laurent.hpp"

namespace su2cert {

/// The d-th cyclotomic polynomial, computed by exact division of t^d - 1 by
/// the cyclotomic polynomials of the proper divisors of d. Memoized.
RatPoly cyclotomic(long d);

/// Multiplies by a power of the variable so that the lowest exponent is 0.
/// Zeros away from the origin are unchanged.
template <class C>
LaurentPoly<C> clear_to_ordinary(const LaurentPoly<C>& p) {
  if (p.is_zero()) return p;
  return p.shifted(-p.order());
}

/// Least d such that some primitive d-th root of unity is a zero of p,
/// i.e. the least d with cyclotomic(d) dividing the cleared polynomial.
/// Complete: a root-of-unity zero forces its (irreducible) cyclotomic
/// polynomial to divide over Q, and phi(d) <= deg bounds the search.
std::optional<long> root_of_unity_zero(const RatPoly& p);

/// True iff some p-th root of unity (of any order dividing p) is a zero,
/// tested as gcd(cleared, t^p - 1) being nonconstant.
bool pth_root_zero(const RatPoly& poly, long p);

/// All d >= 1 with euler_phi(d) <= bound, ascending.
std::vector<long> totient_bounded(long bound);

}  // namespace su2cert
