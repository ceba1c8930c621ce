#include "su2cert/gaussexp.hpp"

#include <sstream>

namespace su2cert {

BivarPoly BivarPoly::constant(const Rational& c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(long ds, long dt, const Rational& c) {
  BivarPoly p;
  p.add_term(ds, dt, c);
  return p;
}

Rational BivarPoly::coeff(long ds, long dt) const {
  auto it = terms_.find({ds, dt});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivarPoly::add_term(long ds, long dt, const Rational& c) {
  if (c.is_zero()) return;
  Key key{ds, dt};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BivarPoly operator*(const Rational& c, const BivarPoly& a) {
  BivarPoly out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : a.terms_) out.terms_.emplace(k, c * v);
  return out;
}

BivarPoly BivarPoly::d_ds() const {
  BivarPoly out;
  for (const auto& [k, c] : terms_)
    if (k.first) out.terms_.emplace(Key{k.first - 1, k.second}, c * Rational(k.first));
  return out;
}

BivarPoly BivarPoly::d_dt() const {
  BivarPoly out;
  for (const auto& [k, c] : terms_)
    if (k.second) out.terms_.emplace(Key{k.first, k.second - 1}, c * Rational(k.second));
  return out;
}

BivarPoly BivarPoly::mul_s() const {
  BivarPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.first + 1, k.second}, c);
  return out;
}

BivarPoly BivarPoly::mul_t() const {
  BivarPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.first, k.second + 1}, c);
  return out;
}

std::string BivarPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    os << c;
    if (k.first) os << "*s^" << k.first;
    if (k.second) os << "*t^" << k.second;
    first = false;
  }
  return os.str();
}

GaussExpTerm GaussExpTerm::pure_exponential(const Rational& scale, const Rational& q,
                                            const Rational& a, const Rational& k) {
  return GaussExpTerm{BivarPoly::constant(scale), q, a, k};
}

GaussExpTerm GaussExpTerm::d_dt() const {
  BivarPoly p = prefactor.d_dt();
  p += gauss_q * prefactor.mul_t();
  p += lin_t * prefactor;
  return GaussExpTerm{p, gauss_q, lin_s, lin_t};
}

GaussExpTerm GaussExpTerm::d_ds() const {
  BivarPoly p = prefactor.d_ds();
  p += lin_s * prefactor;
  return GaussExpTerm{p, gauss_q, lin_s, lin_t};
}

GaussExpTerm GaussExpTerm::mul_t() const {
  return GaussExpTerm{prefactor.mul_t(), gauss_q, lin_s, lin_t};
}

GaussExpTerm GaussExpTerm::mul_s() const {
  return GaussExpTerm{prefactor.mul_s(), gauss_q, lin_s, lin_t};
}

GaussExpSum::GaussExpSum(std::vector<GaussExpTerm> terms) {
  for (const auto& t : terms) add(t);
}

void GaussExpSum::add(const GaussExpTerm& t) {
  if (t.prefactor.is_zero()) return;
  for (auto& mine : terms_) {
    if (mine.same_exponential(t)) {
      mine.prefactor += t.prefactor;
      if (mine.prefactor.is_zero()) {
        mine = terms_.back();
        terms_.pop_back();
      }
      return;
    }
  }
  terms_.push_back(t);
}

GaussExpSum GaussExpSum::d_dt() const {
  GaussExpSum out;
  for (const auto& t : terms_) out.add(t.d_dt());
  return out;
}

GaussExpSum GaussExpSum::d_ds() const {
  GaussExpSum out;
  for (const auto& t : terms_) out.add(t.d_ds());
  return out;
}

GaussExpSum GaussExpSum::mul_t() const {
  GaussExpSum out;
  for (const auto& t : terms_) out.add(t.mul_t());
  return out;
}

Rational GaussExpSum::at_origin() const {
  Rational acc(0);
  for (const auto& t : terms_) acc += t.prefactor.at_origin();
  return acc;
}

GaussExpTerm apply_weyl(const WeylOperator& w, const GaussExpTerm& term) {
  GaussExpTerm out{BivarPoly(), term.gauss_q, term.lin_s, term.lin_t};
  for (const auto& [key, c] : w.coeffs()) {
    GaussExpTerm cur = term;
    for (long l = 0; l < key.second; ++l) cur = cur.d_dt();
    for (long k = 0; k < key.first; ++k) cur = cur.mul_t();
    out.prefactor += c * cur.prefactor;
  }
  return out;
}

GaussExpSum apply_weyl(const WeylOperator& w, const GaussExpSum& f) {
  GaussExpSum out;
  for (const auto& t : f.terms()) out.add(apply_weyl(w, t));
  return out;
}

GaussExpSum apply_ds_poly(const RatPoly& p, const GaussExpSum& f) {
  if (!p.is_zero() && p.order() < 0)
    throw std::invalid_argument("apply_ds_poly: negative powers of d/ds");
  GaussExpSum out;
  for (const auto& term : f.terms()) {
    GaussExpTerm acc{BivarPoly(), term.gauss_q, term.lin_s, term.lin_t};
    GaussExpTerm cur = term;
    long done = 0;
    for (const auto& [e, c] : p.terms()) {
      while (done < e) {
        cur = cur.d_ds();
        ++done;
      }
      acc.prefactor += c * cur.prefactor;
    }
    out.add(acc);
  }
  return out;
}

}  // namespace su2cert
