#include "su2cert/knots.hpp"

#include <algorithm>

#include "su2cert/intmath.hpp"

namespace su2cert {

void KnotRecord::validate() const {
  if (name.empty()) throw std::invalid_argument("KnotRecord: empty name");
  if (conway) {
    for (const auto& [e, c] : conway->terms()) {
      if (e < 0) throw std::invalid_argument(name + ": conway polynomial has negative powers");
      if (e % 2) throw std::invalid_argument(name + ": conway polynomial has odd powers");
    }
  }
  if (alexander) {
    if (!alexander->is_symmetric())
      throw std::invalid_argument(name + ": alexander polynomial is not symmetric");
    if (alexander->eval(Rational(1)) != Rational(1))
      throw std::invalid_argument(name + ": alexander polynomial is not 1 at t = 1");
  }
  if (conway && alexander) {
    if (conway_to_alexander(*conway) != *alexander)
      throw std::invalid_argument(name + ": conway and alexander polynomials disagree");
  }
  if (genus) {
    if (*genus < 0) throw std::invalid_argument(name + ": negative genus");
    if (alexander && !alexander->is_zero() && alexander->degree() > *genus)
      throw std::invalid_argument(name + ": alexander degree exceeds the genus");
  }
  if (sl_bar_mirror && *sl_bar_mirror % 2 == 0)
    throw std::invalid_argument(name + ": self-linking numbers are odd");
  if (!nontrivial) {
    if (genus && *genus != 0) throw std::invalid_argument(name + ": trivial knot with genus > 0");
    if (alexander && *alexander != RatPoly::one())
      throw std::invalid_argument(name + ": trivial knot with nontrivial alexander polynomial");
  }
}

RatPoly conway_to_alexander(const RatPoly& conway) {
  RatPoly u("t");  // z^2 = t - 2 + 1/t
  u.set(1, Rational(1));
  u.set(0, Rational(-2));
  u.set(-1, Rational(1));
  RatPoly out = RatPoly::zero("t");
  for (const auto& [e, c] : conway.terms()) {
    if (e < 0 || e % 2)
      throw std::invalid_argument("conway_to_alexander: needs even nonnegative powers");
    out += u.pow(e / 2) * c;
  }
  return out;
}

RatPoly alexander_to_conway(const RatPoly& alexander) {
  if (alexander.is_zero()) return RatPoly::zero("z");
  if (!alexander.is_symmetric())
    throw std::invalid_argument("alexander_to_conway: polynomial is not symmetric");
  long d = alexander.degree();
  // P_j with t^j + t^-j = P_j(z^2), computed in z directly.
  RatPoly u("z");
  u.set(2, Rational(1));
  u.set(0, Rational(2));  // z^2 + 2 = t + 1/t
  std::vector<RatPoly> p(d + 1, RatPoly::zero("z"));
  p[0] = RatPoly::constant(Rational(2), "z");
  if (d >= 1) p[1] = u;
  for (long j = 2; j <= d; ++j) p[j] = u * p[j - 1] - p[j - 2];
  RatPoly out = RatPoly::constant(alexander.coeff(0), "z");
  for (long j = 1; j <= d; ++j) out += p[j] * alexander.coeff(j);
  return out;
}

Rational phi1(const RatPoly& conway, long components) {
  if (components < 1) throw std::invalid_argument("phi1: bad component count");
  long base = components - 1;
  for (const auto& [e, c] : conway.terms()) {
    if (e < base || (e - base) % 2)
      throw std::invalid_argument("phi1: polynomial violates the z^{k-1}(a0 + a1 z^2 + ...) form");
  }
  return conway.coeff(components + 1);
}

Rational hoste_casson(const Integer& m, const Integer& n, const Rational& phi1_k1,
                      const Rational& phi1_k2, const Rational& phi1_link) {
  return -Rational(m) * phi1_k1 - Rational(n) * phi1_k2 + Rational(m) * Rational(n) * phi1_link;
}

Rational casson_plus_one_surgery(const RatPoly& alexander) {
  return alexander.second_derivative_at_one() / Rational(2);
}

RatPoly torus_knot_alexander(long p, long q) {
  if (q < 1 || p == 0) throw std::invalid_argument("torus_knot_alexander: bad parameters");
  long ap = p < 0 ? -p : p;  // mirror-invariant
  if (gcd_long(ap, q) != 1) throw std::invalid_argument("torus_knot_alexander: p, q not coprime");
  auto tp = [](long e) { return RatPoly::monomial(e, Rational(1)) - RatPoly::one(); };
  RatPoly num = tp(ap * q) * tp(1);
  RatPoly den = tp(ap) * tp(q);
  auto [quot, rem] = poly_divmod(num, den);
  if (!rem.is_zero()) throw std::logic_error("torus_knot_alexander: inexact division");
  long shift = (ap - 1) * (q - 1) / 2;
  return quot.shifted(-shift);
}

RatPoly cable_alexander(const RatPoly& alexander, long p, long q) {
  if (q < 1) throw std::invalid_argument("cable_alexander: longitudinal winding must be >= 1");
  if (gcd_long(p, q) != 1) throw std::invalid_argument("cable_alexander: p, q not coprime");
  RatPoly factor = (p == 1 || p == -1) ? RatPoly::one() : torus_knot_alexander(p, q);
  return alexander.substitute_power(q) * factor;
}

long cable_genus(long g, long p, long q) {
  if (g < 0 || q < 1) throw std::invalid_argument("cable_genus: bad parameters");
  if (gcd_long(p, q) != 1) throw std::invalid_argument("cable_genus: p, q not coprime");
  long ap = p < 0 ? -p : p;
  return q * g + (ap - 1) * (q - 1) / 2;
}

RatPoly genus1_alexander(long a) {
  if (a == 0) return RatPoly::one();
  RatPoly out("t");
  out.set(1, Rational(a));
  out.set(0, Rational(1 - 2 * a));
  out.set(-1, Rational(a));
  return out;
}

// ---- SkeinValue ---------------------------------------------------------

SkeinValue SkeinValue::unknown(const std::string& name, long divisibility) {
  SkeinValue v;
  v.unknowns_[name] = {RatPoly::one("z"), divisibility};
  return v;
}

SkeinValue SkeinValue::operator-() const {
  SkeinValue out(-known_);
  for (const auto& [n, u] : unknowns_) out.unknowns_[n] = {-u.coeff, u.divisibility};
  return out;
}

SkeinValue& SkeinValue::operator+=(const SkeinValue& o) {
  known_ += o.known_;
  for (const auto& [n, u] : o.unknowns_) {
    auto it = unknowns_.find(n);
    if (it == unknowns_.end()) {
      unknowns_[n] = u;
      continue;
    }
    if (it->second.divisibility != u.divisibility)
      throw std::invalid_argument("SkeinValue: one unknown with two divisibilities");
    it->second.coeff += u.coeff;
    if (it->second.coeff.is_zero()) unknowns_.erase(it);
  }
  return *this;
}

SkeinValue operator*(const SkeinValue& a, const SkeinValue& b) {
  if (a.has_unknowns() && b.has_unknowns())
    throw std::invalid_argument("SkeinValue: product of two formal unknowns");
  const SkeinValue& poly_side = a.has_unknowns() ? b : a;
  const SkeinValue& other = a.has_unknowns() ? a : b;
  SkeinValue out(poly_side.known_ * other.known_);
  for (const auto& [n, u] : other.unknowns_) {
    RatPoly c = poly_side.known_ * u.coeff;
    if (!c.is_zero()) out.unknowns_[n] = {c, u.divisibility};
  }
  return out;
}

SkeinValue operator*(const RatPoly& p, const SkeinValue& v) { return SkeinValue(p) * v; }

SkeinValue SkeinValue::meridian(int sign) const {
  if (sign != 1 && sign != -1) throw std::invalid_argument("meridian: sign must be +-1");
  RatPoly z = RatPoly::monomial(1, Rational(sign), "z");
  return z * *this;
}

std::optional<Rational> SkeinValue::coefficient(long e) const {
  for (const auto& [n, u] : unknowns_) {
    if (u.coeff.is_zero()) continue;
    // an unknown can contribute at any exponent >= order(coeff) + divisibility
    if (u.coeff.order() + u.divisibility <= e) return std::nullopt;
  }
  return known_.coeff(e);
}

std::optional<Rational> phi1(const SkeinValue& v, long components) {
  if (components < 1) throw std::invalid_argument("phi1: bad component count");
  long base = components - 1;
  for (const auto& [e, c] : v.known().terms())
    if (e < base || (e - base) % 2)
      throw std::invalid_argument("phi1: known part violates the normal form");
  return v.coefficient(components + 1);
}

// ---- KnotTable ----------------------------------------------------------

void KnotTable::add(KnotRecord record) {
  record.validate();
  if (knots_.count(record.name))
    throw std::invalid_argument("KnotTable: duplicate knot '" + record.name + "'");
  knots_.emplace(record.name, std::move(record));
}

void KnotTable::add_link(LinkRecord record) {
  if (links_.count(record.name))
    throw std::invalid_argument("KnotTable: duplicate link '" + record.name + "'");
  links_.emplace(record.name, std::move(record));
}

const KnotRecord& KnotTable::knot(const std::string& name) const {
  auto it = knots_.find(name);
  if (it == knots_.end()) throw std::invalid_argument("KnotTable: unknown knot '" + name + "'");
  return it->second;
}

const LinkRecord& KnotTable::link(const std::string& name) const {
  auto it = links_.find(name);
  if (it == links_.end()) throw std::invalid_argument("KnotTable: unknown link '" + name + "'");
  return it->second;
}

std::vector<std::string> KnotTable::knot_names() const {
  std::vector<std::string> out;
  for (const auto& [n, r] : knots_) out.push_back(n);
  return out;
}

std::vector<std::string> KnotTable::link_names() const {
  std::vector<std::string> out;
  for (const auto& [n, r] : links_) out.push_back(n);
  return out;
}

SkeinValue KnotTable::conway_value(const std::string& name) const {
  const KnotRecord& r = knot(name);
  if (!r.conway) throw std::invalid_argument("KnotTable: no conway polynomial for '" + name + "'");
  return SkeinValue(*r.conway);
}

std::vector<std::string> KnotTable::validate_all() const {
  std::vector<std::string> problems;
  for (const auto& [n, r] : knots_) {
    try {
      r.validate();
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
  }
  for (const auto& [n, l] : links_) {
    for (const auto& c : l.components)
      if (!knots_.count(c)) problems.push_back(l.name + ": missing component '" + c + "'");
    if (l.conway && l.phi1_link) {
      try {
        if (phi1(*l.conway, static_cast<long>(l.components.size())) != *l.phi1_link)
          problems.push_back(l.name + ": stored phi1 disagrees with the conway polynomial");
      } catch (const std::exception& e) {
        problems.push_back(l.name + ": " + e.what());
      }
    }
  }
  return problems;
}

}  // namespace su2cert
