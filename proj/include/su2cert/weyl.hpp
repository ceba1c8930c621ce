#pragma once

#include <map>
#include <string>
#include <vector>

#include "su2cert/laurent.hpp"

namespace su2cert {

/// Element of the one-variable Weyl algebra in normal form:
/// sum c_{k,l} t^k D^l, where D = d/dt and [D, t] = 1. The normal form is
/// unique; composition reorders products with D^l t^m = sum_j C(l,j) m(m-1)
/// ...(m-j+1) t^{m-j} D^{l-j}.
class WeylOperator {
 public:
  using Key = std::pair<long, long>;  // (t-power, D-power)

  WeylOperator() = default;

  static WeylOperator zero() { return WeylOperator(); }
  static WeylOperator identity() { return monomial(0, 0, Rational(1)); }
  static WeylOperator t() { return monomial(1, 0, Rational(1)); }
  static WeylOperator d() { return monomial(0, 1, Rational(1)); }
  static WeylOperator monomial(long k, long l, const Rational& c);
  /// alpha*D + beta*t + gamma.
  static WeylOperator linear(const Rational& alpha, const Rational& beta, const Rational& gamma);

  const std::map<Key, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(long k, long l) const;
  bool is_zero() const { return coeffs_.empty(); }
  void add_term(long k, long l, const Rational& c);

  WeylOperator operator-() const;
  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);  // composition
  WeylOperator& operator*=(const WeylOperator& o) { return *this = *this * o; }
  friend WeylOperator operator*(const Rational& c, const WeylOperator& a);
  friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const WeylOperator& a, const WeylOperator& b) { return !(a == b); }

  long max_t_degree() const;
  long max_d_degree() const;

  std::string str() const;

 private:
  std::map<Key, Rational> coeffs_;
};

/// Normal-ordered product of the factors, left to right.
WeylOperator weyl_normal_order(const std::vector<WeylOperator>& factors);

/// d_i = prod_{j != i} 1/(k_i - k_j) * (D - Q t - k_j). Indices are 0-based;
/// an empty product (n = 1) is the identity. The k values must be distinct.
WeylOperator build_di(size_t i, const std::vector<Rational>& ks, const Rational& q);

/// The k = 0 row of the normal form: g(t) = sum_l c_{0,l} t^l.
RatPoly extract_gi(const WeylOperator& d);

}  // namespace su2cert
