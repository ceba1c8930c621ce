#include "su2cert/weyl.hpp"

#include <sstream>

#include "su2cert/intmath.hpp"

namespace su2cert {

WeylOperator WeylOperator::monomial(long k, long l, const Rational& c) {
  WeylOperator w;
  w.add_term(k, l, c);
  return w;
}

WeylOperator WeylOperator::linear(const Rational& alpha, const Rational& beta,
                                  const Rational& gamma) {
  WeylOperator w;
  w.add_term(0, 1, alpha);
  w.add_term(1, 0, beta);
  w.add_term(0, 0, gamma);
  return w;
}

Rational WeylOperator::coeff(long k, long l) const {
  auto it = coeffs_.find({k, l});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void WeylOperator::add_term(long k, long l, const Rational& c) {
  if (c.is_zero()) return;
  Key key{k, l};
  auto it = coeffs_.find(key);
  if (it == coeffs_.end()) {
    coeffs_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator out;
  for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
  return out;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, -c);
  return *this;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  WeylOperator out;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) {
      long k = ka.first, l = ka.second;  // t^k D^l
      long m = kb.first, n = kb.second;  // t^m D^n
      // D^l t^m = sum_j C(l,j) * m(m-1)...(m-j+1) * t^{m-j} D^{l-j}
      long jmax = std::min(l, m);
      for (long j = 0; j <= jmax; ++j) {
        Integer w = binomial(l, j) * falling_factorial(m, j);
        out.add_term(k + m - j, l + n - j, ca * cb * Rational(w));
      }
    }
  return out;
}

WeylOperator operator*(const Rational& c, const WeylOperator& a) {
  WeylOperator out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : a.coeffs_) out.coeffs_.emplace(k, c * v);
  return out;
}

long WeylOperator::max_t_degree() const {
  long m = 0;
  for (const auto& [k, c] : coeffs_) m = std::max(m, k.first);
  return m;
}

long WeylOperator::max_d_degree() const {
  long m = 0;
  for (const auto& [k, c] : coeffs_) m = std::max(m, k.second);
  return m;
}

std::string WeylOperator::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : coeffs_) {
    if (!first) os << " + ";
    os << c;
    if (key.first) os << "*t^" << key.first;
    if (key.second) os << "*D^" << key.second;
    first = false;
  }
  return os.str();
}

WeylOperator weyl_normal_order(const std::vector<WeylOperator>& factors) {
  WeylOperator out = WeylOperator::identity();
  for (const auto& f : factors) out *= f;
  return out;
}

WeylOperator build_di(size_t i, const std::vector<Rational>& ks, const Rational& q) {
  if (i >= ks.size()) throw std::invalid_argument("build_di: index out of range");
  for (size_t a = 0; a < ks.size(); ++a)
    for (size_t b = a + 1; b < ks.size(); ++b)
      if (ks[a] == ks[b]) throw std::invalid_argument("build_di: repeated k values");
  WeylOperator out = WeylOperator::identity();
  for (size_t j = 0; j < ks.size(); ++j) {
    if (j == i) continue;
    Rational scale = (ks[i] - ks[j]).inverse();
    out *= scale * WeylOperator::linear(Rational(1), -q, -ks[j]);
  }
  return out;
}

RatPoly extract_gi(const WeylOperator& d) {
  RatPoly g("t");
  for (const auto& [key, c] : d.coeffs())
    if (key.first == 0) g.set(key.second, c);
  return g;
}

}  // namespace su2cert
