#pragma once

// Test-only oracles, kept independent of the library's closed-form code paths.

#include <vector>

#include "su2cert/donaldson.hpp"
#include "su2cert/gaussexp.hpp"
#include "su2cert/weyl.hpp"

namespace su2cert::oracle {

/// Bivariate power series in (s, t) truncated to total degree <= cap.
/// Dense grid of exact rationals; c(p, q) is the coefficient of s^p t^q.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(long cap) : cap_(cap), grid_((cap + 1) * (cap + 1), Rational(0)) {}

  long cap() const { return cap_; }
  Rational& c(long p, long q) { return grid_[p * (cap_ + 1) + q]; }
  const Rational& c(long p, long q) const { return grid_[p * (cap_ + 1) + q]; }

  TruncatedSeries d_ds() const {
    TruncatedSeries out(cap_);
    for (long p = 0; p + 1 <= cap_; ++p)
      for (long q = 0; p + 1 + q <= cap_; ++q) out.c(p, q) = Rational(p + 1) * c(p + 1, q);
    return out;
  }
  TruncatedSeries d_dt() const {
    TruncatedSeries out(cap_);
    for (long p = 0; p <= cap_; ++p)
      for (long q = 0; p + q + 1 <= cap_; ++q) out.c(p, q) = Rational(q + 1) * c(p, q + 1);
    return out;
  }
  TruncatedSeries mul_t() const {
    TruncatedSeries out(cap_);
    for (long p = 0; p <= cap_; ++p)
      for (long q = 1; p + q <= cap_; ++q) out.c(p, q) = c(p, q - 1);
    return out;
  }
  TruncatedSeries& add_scaled(const TruncatedSeries& o, const Rational& f) {
    for (size_t i = 0; i < grid_.size(); ++i) grid_[i] += f * o.grid_[i];
    return *this;
  }

 private:
  long cap_;
  std::vector<Rational> grid_;
};

/// Expands scale * exp(Q t^2/2 + a s + k t) to total degree <= cap:
/// [s^p t^q] = scale * a^p/p! * sum_{2u+v=q} (Q/2)^u k^v / (u! v!).
inline TruncatedSeries expand_exponential(const Rational& scale, const Rational& q2,
                                          const Rational& a, const Rational& k, long cap) {
  TruncatedSeries out(cap);
  Rational half_q = q2 / Rational(2);
  // t-profile gamma(q)
  std::vector<Rational> gamma(cap + 1, Rational(0));
  std::vector<Rational> inv_fact(cap + 1, Rational(1));
  for (long i = 1; i <= cap; ++i) inv_fact[i] = inv_fact[i - 1] / Rational(i);
  for (long u = 0; 2 * u <= cap; ++u) {
    Rational qu = half_q.pow(u) * inv_fact[u];
    for (long v = 0; 2 * u + v <= cap; ++v)
      gamma[2 * u + v] += qu * k.pow(v) * inv_fact[v];
  }
  for (long p = 0; p <= cap; ++p) {
    Rational sp = scale * a.pow(p) * inv_fact[p];
    for (long qq = 0; p + qq <= cap; ++qq) out.c(p, qq) = sp * gamma[qq];
  }
  return out;
}

inline TruncatedSeries expand_model(const DonaldsonSeriesModel& m, long cap) {
  TruncatedSeries out(cap);
  for (const auto& c : m.classes)
    out.add_scaled(expand_exponential(Rational(1), m.q_sigma, c.a, c.k, cap), c.alpha);
  return out;
}

/// Applies a normal-ordered Weyl operator in t to the truncated series.
inline TruncatedSeries apply_weyl_series(const WeylOperator& w, const TruncatedSeries& f) {
  TruncatedSeries out(f.cap());
  for (const auto& [key, coeff] : w.coeffs()) {
    TruncatedSeries cur = f;
    for (long l = 0; l < key.second; ++l) cur = cur.d_dt();
    for (long k = 0; k < key.first; ++k) cur = cur.mul_t();
    out.add_scaled(cur, coeff);
  }
  return out;
}

/// Applies p(d/ds).
inline TruncatedSeries apply_ds_poly_series(const RatPoly& p, const TruncatedSeries& f) {
  TruncatedSeries out(f.cap());
  TruncatedSeries cur = f;
  long done = 0;
  for (const auto& [e, coeff] : p.terms()) {
    while (done < e) {
      cur = cur.d_ds();
      ++done;
    }
    out.add_scaled(cur, coeff);
  }
  return out;
}

/// [pbot(d/ds) d_i F_j](0,0) through the truncated series route. The final
/// constant term only reads input coefficients of total degree at most
/// deg(pbot) + 2(n-1), so any cap at least that large gives the exact value.
inline Rational orthogonality_entry_series(const std::vector<DonaldsonSeriesModel>& models,
                                           size_t i, size_t j, const RatPoly& pbot_p,
                                           long cap) {
  std::vector<Rational> ks;
  for (const auto& m : models) ks.push_back(m.canonical_k());
  WeylOperator di = build_di(i, ks, models[0].q_sigma);
  TruncatedSeries f = expand_model(models[j], cap);
  TruncatedSeries g = apply_weyl_series(di, f);
  TruncatedSeries h = apply_ds_poly_series(pbot_p, g);
  return h.c(0, 0);
}

/// The same value through the coefficient-sum identity:
/// sum_k sum_l e_k c_l k! l! [s^k t^l] F_j, with e from pbot and c from
/// extract_gi(d_i). Exercises extract_gi against the series expansion.
inline Rational orthogonality_entry_coefficient_sum(
    const std::vector<DonaldsonSeriesModel>& models, size_t i, size_t j,
    const RatPoly& pbot_p, long cap) {
  std::vector<Rational> ks;
  for (const auto& m : models) ks.push_back(m.canonical_k());
  RatPoly gi = extract_gi(build_di(i, ks, models[0].q_sigma));
  TruncatedSeries f = expand_model(models[j], cap);
  Rational acc(0);
  for (const auto& [k, ek] : pbot_p.terms()) {
    Rational kfact(1);
    for (long x = 2; x <= k; ++x) kfact *= Rational(x);
    for (const auto& [l, cl] : gi.terms()) {
      if (k + l > cap) throw std::logic_error("oracle cap too small");
      Rational lfact(1);
      for (long x = 2; x <= l; ++x) lfact *= Rational(x);
      acc += ek * cl * kfact * lfact * f.c(k, l);
    }
  }
  return acc;
}

}  // namespace su2cert::oracle
