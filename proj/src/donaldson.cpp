#include "su2cert/donaldson.hpp"

#include "su2cert/spectral.hpp"

namespace su2cert {

void DonaldsonSeriesModel::validate() const {
  if (genus < 2) throw std::invalid_argument("DonaldsonSeriesModel: genus must be >= 2");
  if (classes.empty()) throw std::invalid_argument("DonaldsonSeriesModel: no classes");
  Rational bound(2 * genus - 2);
  long canonical = 0;
  for (const auto& c : classes) {
    if (c.alpha.is_zero())
      throw std::invalid_argument("DonaldsonSeriesModel: zero alpha coefficient");
    if (abs(c.a) > bound)
      throw std::invalid_argument("DonaldsonSeriesModel: |a| exceeds 2g-2");
    if (c.a == Rational(2 - 2 * genus)) ++canonical;
  }
  if (canonical != 1)
    throw std::invalid_argument(
        "DonaldsonSeriesModel: need exactly one class with a = 2-2g");
}

size_t DonaldsonSeriesModel::canonical_index() const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].a == Rational(2 - 2 * genus)) return i;
  throw std::logic_error("DonaldsonSeriesModel: no canonical class");
}

GaussExpSum DonaldsonSeriesModel::series() const {
  GaussExpSum f;
  for (const auto& c : classes)
    f.add(GaussExpTerm::pure_exponential(c.alpha, q_sigma, c.a, c.k));
  return f;
}

RatMatrix orthogonality_matrix(const std::vector<DonaldsonSeriesModel>& models) {
  size_t n = models.size();
  if (n == 0) throw std::invalid_argument("orthogonality_matrix: no models");
  for (const auto& m : models) m.validate();
  long g = models[0].genus;
  Rational q = models[0].q_sigma;
  std::vector<Rational> ks;
  for (const auto& m : models) {
    if (m.genus != g || !(m.q_sigma == q))
      throw std::invalid_argument("orthogonality_matrix: models must share genus and Q");
    ks.push_back(m.canonical_k());
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (ks[a] == ks[b])
        throw std::invalid_argument("orthogonality_matrix: canonical k values must be distinct");

  RatPoly pb = pbot_poly(g);
  RatMatrix out(static_cast<long>(n), static_cast<long>(n));
  for (size_t i = 0; i < n; ++i) {
    WeylOperator di = build_di(i, ks, q);
    for (size_t j = 0; j < n; ++j) {
      GaussExpSum f = models[j].series();
      GaussExpSum dif = apply_weyl(di, f);
      GaussExpSum full = apply_ds_poly(pb, dif);
      out(static_cast<long>(i), static_cast<long>(j)) = full.at_origin();
    }
  }
  return out;
}

std::vector<Integer> distinct_pairing_vector(const std::vector<std::vector<Rational>>& cs) {
  if (cs.empty()) return {};
  size_t dim = cs[0].size();
  for (const auto& c : cs)
    if (c.size() != dim)
      throw std::invalid_argument("distinct_pairing_vector: mixed dimensions");
  if (cs.size() == 1) return std::vector<Integer>(dim, 0);
  for (size_t a = 0; a < cs.size(); ++a)
    for (size_t b = a + 1; b < cs.size(); ++b)
      if (cs[a] == cs[b])
        throw std::invalid_argument("distinct_pairing_vector: vectors must be distinct");

  // Pairings with (1, M, M^2, ...) are polynomials in M; distinct vectors
  // give distinct nonzero difference polynomials, so only finitely many M
  // fail and the search terminates.
  for (Integer m = 1;; m += 1) {
    std::vector<Integer> x(dim);
    Integer power = 1;
    for (size_t d = 0; d < dim; ++d) {
      x[d] = power;
      power *= m;
    }
    std::vector<Rational> pairings;
    bool ok = true;
    for (const auto& c : cs) {
      Rational p(0);
      for (size_t d = 0; d < dim; ++d) p += c[d] * Rational(x[d]);
      for (const auto& prev : pairings)
        if (prev == p) {
          ok = false;
          break;
        }
      if (!ok) break;
      pairings.push_back(p);
    }
    if (ok) return x;
  }
}

}  // namespace su2cert
