#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "su2cert/rational.hpp"

namespace su2cert {

/// Sparse Laurent polynomial over an exact coefficient field C (Rational or
/// GaussianRational). Exponents may be negative. Zero coefficients are never
/// stored. Each polynomial carries a variable tag; binary operations require
/// matching tags unless one side is constant.
template <class C>
class LaurentPoly {
 public:
  using Coeff = C;
  using TermMap = std::map<long, C>;

  LaurentPoly() : var_("t") {}
  explicit LaurentPoly(std::string var) : var_(std::move(var)) {}

  static LaurentPoly zero(std::string var = "t") { return LaurentPoly(std::move(var)); }
  static LaurentPoly constant(const C& c, std::string var = "t") {
    LaurentPoly p(std::move(var));
    p.set(0, c);
    return p;
  }
  static LaurentPoly one(std::string var = "t") { return constant(C(1), std::move(var)); }
  static LaurentPoly monomial(long exp, const C& c, std::string var = "t") {
    LaurentPoly p(std::move(var));
    p.set(exp, c);
    return p;
  }
  static LaurentPoly variable(std::string var = "t") { return monomial(1, C(1), std::move(var)); }

  const std::string& var() const { return var_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  size_t term_count() const { return terms_.size(); }

  /// Largest exponent; undefined for the zero polynomial.
  long degree() const {
    require_nonzero("degree");
    return terms_.rbegin()->first;
  }
  /// Smallest exponent; undefined for the zero polynomial.
  long order() const {
    require_nonzero("order");
    return terms_.begin()->first;
  }

  C coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? C(0) : it->second;
  }
  C leading_coeff() const {
    require_nonzero("leading_coeff");
    return terms_.rbegin()->second;
  }

  void set(long exp, const C& c) {
    if (c == C(0))
      terms_.erase(exp);
    else
      terms_[exp] = c;
  }
  void add_term(long exp, const C& c) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      if (!(c == C(0))) terms_.emplace(exp, c);
      return;
    }
    it->second += c;
    if (it->second == C(0)) terms_.erase(it);
  }

  LaurentPoly operator-() const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    adopt_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    adopt_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(a.merged_var(b));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly& operator*=(const C& c) {
    if (c == C(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  friend LaurentPoly operator*(LaurentPoly a, const C& c) { return a *= c; }
  friend LaurentPoly operator*(const C& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(long n) const {
    if (n < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
    LaurentPoly out = one(var_);
    LaurentPoly base = *this;
    while (n) {
      if (n & 1) out *= base;
      base *= base;
      n >>= 1;
    }
    return out;
  }

  /// Multiply by var^shift.
  LaurentPoly shifted(long shift) const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
    return out;
  }

  /// var -> var^-1.
  LaurentPoly reversed() const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
  }
  bool is_symmetric() const { return *this == reversed(); }

  /// P(x), exact. x must be nonzero when negative exponents are present.
  template <class X>
  X eval(const X& x) const {
    if (terms_.empty()) return X(0);
    if (order() < 0 && x == X(0))
      throw std::domain_error(
          "LaurentPoly::eval: zero evaluation of a polynomial with negative exponents");
    // Horner over ascending exponents, then fix up the leading power.
    X acc(0);
    long prev = 0;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) acc = acc * power(x, prev - it->first);
      acc += X(it->second);
      prev = it->first;
      first = false;
    }
    if (prev != 0) acc = acc * power(x, prev);
    return acc;
  }

  /// d/dvar.
  LaurentPoly derivative() const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : terms_)
      if (e != 0) out.terms_.emplace(e - 1, c * C(e));
    return out;
  }

  /// Exact P''(1) = sum c_e * e * (e-1).
  C second_derivative_at_one() const {
    C acc(0);
    for (const auto& [e, c] : terms_) acc += c * C(e) * C(e - 1);
    return acc;
  }

  /// P(var^k) for k >= 1.
  LaurentPoly substitute_power(long k) const {
    if (k < 1) throw std::invalid_argument("substitute_power: k must be positive");
    LaurentPoly out(var_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e * k, c);
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::ostringstream cs;
      cs << it->second;
      std::string c = cs.str();
      if (!first) os << (c[0] == '-' ? " - " : " + ");
      if (!first && c[0] == '-') c = c.substr(1);
      bool unit = (c == "1");
      bool neg_unit = first && (c == "-1");
      if (it->first == 0) {
        os << (first ? c : c);
      } else {
        if (neg_unit)
          os << '-';
        else if (!unit)
          os << c << '*';
        os << var_;
        if (it->first != 1) os << '^' << it->first;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void require_nonzero(const char* what) const {
    if (terms_.empty())
      throw std::logic_error(std::string("LaurentPoly::") + what + ": zero polynomial");
  }
  std::string merged_var(const LaurentPoly& o) const {
    if (is_constant()) return o.var_;
    if (o.is_constant()) return var_;
    if (var_ != o.var_)
      throw std::invalid_argument("LaurentPoly: mixed variables '" + var_ + "' and '" + o.var_ + "'");
    return var_;
  }
  void adopt_var(const LaurentPoly& o) { var_ = merged_var(o); }

  template <class X>
  static X power(const X& x, long n) {
    if (n < 0) return X(1) / power(x, -n);
    X out(1);
    X base = x;
    while (n) {
      if (n & 1) out = out * base;
      base = base * base;
      n >>= 1;
    }
    return out;
  }

  TermMap terms_;
  std::string var_;
};

using RatPoly = LaurentPoly<Rational>;
using GaussPoly = LaurentPoly<GaussianRational>;

inline GaussPoly to_gauss_poly(const RatPoly& p) {
  GaussPoly out(p.var());
  for (const auto& [e, c] : p.terms()) out.set(e, GaussianRational(c));
  return out;
}

/// Coefficient-wise complex conjugation.
inline GaussPoly conj(const GaussPoly& p) {
  GaussPoly out(p.var());
  for (const auto& [e, c] : p.terms()) out.set(e, c.conj());
  return out;
}

/// Demotes a Q[i] polynomial with real coefficients to Q coefficients.
inline RatPoly to_rat_poly(const GaussPoly& p) {
  RatPoly out(p.var());
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_real())
      throw std::invalid_argument("to_rat_poly: nonreal coefficient " + c.str());
    out.set(e, c.re());
  }
  return out;
}

/// Quotient and remainder of ordinary polynomials (order >= 0) over a field.
template <class C>
std::pair<LaurentPoly<C>, LaurentPoly<C>> poly_divmod(const LaurentPoly<C>& a,
                                                      const LaurentPoly<C>& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  if ((!a.is_zero() && a.order() < 0) || b.order() < 0)
    throw std::invalid_argument("poly_divmod: negative exponents present");
  LaurentPoly<C> q = LaurentPoly<C>::zero(b.var());
  LaurentPoly<C> r = a;
  long db = b.degree();
  C lb = b.leading_coeff();
  while (!r.is_zero() && r.degree() >= db) {
    long e = r.degree() - db;
    C c = r.leading_coeff() / lb;
    LaurentPoly<C> m = LaurentPoly<C>::monomial(e, c, b.var());
    q += m;
    r -= m * b;
  }
  return {q, r};
}

template <class C>
bool divides(const LaurentPoly<C>& d, const LaurentPoly<C>& p) {
  return poly_divmod(p, d).second.is_zero();
}

/// Monic gcd of ordinary polynomials over a field (Euclidean remainders).
template <class C>
LaurentPoly<C> poly_gcd(LaurentPoly<C> a, LaurentPoly<C> b) {
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  C inv = C(1) / a.leading_coeff();
  return a * inv;
}

}  // namespace su2cert
