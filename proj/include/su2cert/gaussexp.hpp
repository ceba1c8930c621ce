#pragma once

#include <map>
#include <string>
#include <vector>

#include "su2cert/laurent.hpp"
#include "su2cert/weyl.hpp"

namespace su2cert {

/// Polynomial in two variables s, t over Q, sparse on (s-degree, t-degree).
class BivarPoly {
 public:
  using Key = std::pair<long, long>;

  BivarPoly() = default;
  static BivarPoly constant(const Rational& c);
  static BivarPoly monomial(long ds, long dt, const Rational& c);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(long ds, long dt) const;
  void add_term(long ds, long dt, const Rational& c);

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const Rational& c, const BivarPoly& a);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  BivarPoly d_ds() const;
  BivarPoly d_dt() const;
  BivarPoly mul_s() const;
  BivarPoly mul_t() const;
  /// Value at s = t = 0.
  Rational at_origin() const { return coeff(0, 0); }

  std::string str() const;

 private:
  std::map<Key, Rational> terms_;
};

/// q(s,t) * exp(gauss_q * t^2/2 + lin_s * s + lin_t * t). The class is closed
/// under d/ds, d/dt and multiplication by s and t, with the exponential data
/// unchanged:
///   d/dt: q -> dq/dt + (gauss_q * t + lin_t) q
///   d/ds: q -> dq/ds + lin_s * q
struct GaussExpTerm {
  BivarPoly prefactor;
  Rational gauss_q;
  Rational lin_s;
  Rational lin_t;

  static GaussExpTerm pure_exponential(const Rational& scale, const Rational& q,
                                       const Rational& a, const Rational& k);

  GaussExpTerm d_dt() const;
  GaussExpTerm d_ds() const;
  GaussExpTerm mul_t() const;
  GaussExpTerm mul_s() const;

  bool same_exponential(const GaussExpTerm& o) const {
    return gauss_q == o.gauss_q && lin_s == o.lin_s && lin_t == o.lin_t;
  }
};

/// Finite sum of GaussExpTerms; terms with equal exponential data merge.
class GaussExpSum {
 public:
  GaussExpSum() = default;
  explicit GaussExpSum(std::vector<GaussExpTerm> terms);

  const std::vector<GaussExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const GaussExpTerm& t);

  GaussExpSum d_dt() const;
  GaussExpSum d_ds() const;
  GaussExpSum mul_t() const;

  /// Value at s = t = 0 (all exponentials are 1 there).
  Rational at_origin() const;

 private:
  std::vector<GaussExpTerm> terms_;
};

/// Applies the normal-ordered operator sum c_{k,l} t^k D^l, D = d/dt.
GaussExpSum apply_weyl(const WeylOperator& w, const GaussExpSum& f);
GaussExpTerm apply_weyl(const WeylOperator& w, const GaussExpTerm& term);

/// Applies p(d/ds) for an ordinary polynomial p.
GaussExpSum apply_ds_poly(const RatPoly& p, const GaussExpSum& f);

}  // namespace su2cert
