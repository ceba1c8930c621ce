#include "su2cert/spectral.hpp"

#include <algorithm>

namespace su2cert {

long generalized_eigenspace_dim(const GaussMatrix& a, const GaussianRational& lambda) {
  if (!a.is_square()) throw std::invalid_argument("generalized_eigenspace_dim: not square");
  long n = a.rows();
  GaussMatrix shifted = a - lambda * GaussMatrix::identity(n);
  return kernel_dimension(shifted.pow(n));
}

/// Characteristic polynomial det(tI - A) by the Faddeev-LeVerrier recurrence
/// (exact; the divisions by k are exact over Q[i]).
GaussPoly char_poly(const GaussMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("char_poly: not square");
  long n = a.rows();
  GaussPoly p = GaussPoly::monomial(n, GaussianRational(Rational(1)));
  GaussMatrix m(n, n);
  GaussianRational c(Rational(1));
  for (long k = 1; k <= n; ++k) {
    m = a * (m + c * GaussMatrix::identity(n));
    GaussianRational tr(Rational(0));
    for (long i = 0; i < n; ++i) tr += m(i, i);
    c = -(tr / GaussianRational(Rational(k)));
    p.set(n - k, c);
  }
  return p;
}

namespace {

long root_multiplicity(GaussPoly p, const GaussianRational& lambda) {
  GaussPoly factor =
      GaussPoly::variable() - GaussPoly::constant(lambda);
  long mult = 0;
  while (!p.is_zero()) {
    auto [q, r] = poly_divmod(p, factor);
    if (!r.is_zero()) break;
    ++mult;
    p = q;
  }
  return mult;
}

}  // namespace

std::vector<Eigenvalue> spectrum_in_mu_family(const GaussMatrix& a, long kmax) {
  if (!a.is_square()) throw std::invalid_argument("spectrum_in_mu_family: not square");
  long n = a.rows();
  std::vector<GaussianRational> candidates;
  candidates.emplace_back(Rational(0));
  for (long k = 1; k <= kmax; ++k) {
    candidates.emplace_back(Rational(2 * k));
    candidates.emplace_back(Rational(-2 * k));
    candidates.emplace_back(Rational(0), Rational(2 * k));
    candidates.emplace_back(Rational(0), Rational(-2 * k));
  }
  GaussPoly chi = char_poly(a);
  std::vector<Eigenvalue> out;
  long total = 0;
  for (const auto& c : candidates) {
    if (total == n) break;
    if (!chi.eval(c).is_zero()) continue;
    long m = root_multiplicity(chi, c);
    out.push_back({c, m});
    total += m;
  }
  if (total != n)
    throw std::invalid_argument(
        "spectrum_in_mu_family: eigenvalue outside the supported set {0, +-2k, +-2ki}");
  return out;
}

std::vector<Eigenvalue> spectrum_in_mu_family(const GaussMatrix& a) {
  // |lambda| <= n * max(|re| + |im|) bounds any eigenvalue, so candidates
  // +-2k with 2k above that bound cannot occur.
  long n = a.rows();
  Rational maxabs(0);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Rational m = abs(a(i, j).re()) + abs(a(i, j).im());
      if (m > maxabs) maxabs = m;
    }
  Rational bound = Rational(n) * maxabs;
  long kmax = static_cast<long>(mpz_get_si((bound / Rational(2)).floor().get_mpz_t())) + 1;
  return spectrum_in_mu_family(a, std::max(kmax, 1L));
}

RatPoly taylor_shift(const RatPoly& p, const Rational& c) {
  // Repeated synthetic division by (t - c): p(t) = sum b_i (t - c)^i, and the
  // b_i are the coefficients of p(t + c).
  if (!p.is_zero() && p.order() < 0)
    throw std::invalid_argument("taylor_shift: negative exponents");
  if (p.is_zero()) return p;
  long deg = p.degree();
  std::vector<Rational> coeffs(deg + 1, Rational(0));
  for (const auto& [e, v] : p.terms()) coeffs[e] = v;
  RatPoly out(p.var());
  for (long i = 0; i <= deg; ++i) {
    Rational rem(0);
    for (long j = deg; j >= i; --j) {
      rem = coeffs[j] + rem * c;
      coeffs[j] = rem;
    }
    out.set(i, coeffs[i]);
  }
  return out;
}

RatPoly series_inverse(const RatPoly& p, long order) {
  if (order < 1) throw std::invalid_argument("series_inverse: order must be >= 1");
  Rational c0 = p.coeff(0);
  if (c0.is_zero()) throw std::domain_error("series_inverse: zero constant term");
  std::vector<Rational> a(order, Rational(0));
  for (const auto& [e, v] : p.terms())
    if (e >= 0 && e < order) a[e] = v;
  std::vector<Rational> b(order, Rational(0));
  b[0] = c0.inverse();
  for (long k = 1; k < order; ++k) {
    Rational s(0);
    for (long j = 1; j <= k; ++j) s += a[j] * b[k - j];
    b[k] = -s / c0;
  }
  RatPoly out(p.var());
  for (long k = 0; k < order; ++k) out.set(k, b[k]);
  return out;
}

RatPoly projection_polynomial_from_spectrum(const std::vector<Eigenvalue>& spectrum,
                                            const Rational& lambda1,
                                            std::vector<GaussianRational> avoid,
                                            long lambda1_multiplicity_floor) {
  GaussianRational l1(lambda1);
  long m1 = lambda1_multiplicity_floor;
  for (const auto& ev : spectrum)
    if (ev.value == l1) m1 = std::max(m1, ev.multiplicity);
  if (m1 < 1)
    throw std::invalid_argument("projection_polynomial: lambda1 is not an eigenvalue");
  for (const auto& d : avoid)
    if (d == l1)
      throw std::invalid_argument("projection_polynomial: avoid value equals lambda1");

  // Avoid values already covered by eigenvalue factors add nothing.
  std::vector<GaussianRational> extra;
  for (const auto& d : avoid) {
    bool covered = false;
    for (const auto& ev : spectrum)
      if (ev.value == d) {
        covered = true;
        break;
      }
    bool dup = std::find(extra.begin(), extra.end(), d) != extra.end();
    if (!covered && !dup) extra.push_back(d);
  }

  GaussPoly f = GaussPoly::one();
  GaussPoly t = GaussPoly::variable();
  for (const auto& d : extra) f *= (t - GaussPoly::constant(d));
  for (const auto& ev : spectrum) {
    if (ev.value == l1) continue;
    f *= (t - GaussPoly::constant(ev.value)).pow(ev.multiplicity);
  }
  RatPoly g = to_rat_poly(f * conj(f));

  // Invert g modulo (t - lambda1)^{m1} via the shifted power series.
  RatPoly g_shift = taylor_shift(g, lambda1);
  RatPoly h_shift = series_inverse(g_shift, m1);
  RatPoly h = taylor_shift(h_shift, -lambda1);
  return h * g;
}

RatPoly projection_polynomial(const GaussMatrix& a, const Rational& lambda1,
                              const std::vector<GaussianRational>& avoid) {
  auto spectrum = spectrum_in_mu_family(a);
  bool found = false;
  for (const auto& ev : spectrum)
    if (ev.value == GaussianRational(lambda1)) found = true;
  if (!found)
    throw std::invalid_argument("projection_polynomial: lambda1 is not an eigenvalue of A");
  return projection_polynomial_from_spectrum(spectrum, lambda1, avoid);
}

RatPoly pbot(const GaussMatrix& a, long g) {
  if (g < 2) throw std::invalid_argument("pbot: genus must be >= 2");
  auto spectrum = spectrum_in_mu_family(a, g - 1);  // throws off-family
  Rational lambda1(2 - 2 * g);
  std::vector<GaussianRational> avoid;
  for (long m = 3 - 2 * g; m <= 2 * g - 2; ++m) avoid.emplace_back(Rational(m));
  // 2-2g need not occur in the spectrum; the projection is then zero.
  return projection_polynomial_from_spectrum(spectrum, lambda1, avoid, 1);
}

RatPoly pbot_poly(long g) {
  if (g < 2) throw std::invalid_argument("pbot_poly: genus must be >= 2");
  RatPoly p = RatPoly::one();
  RatPoly t = RatPoly::variable();
  Rational denom(1);
  for (long m = 3 - 2 * g; m <= 2 * g - 2; ++m) {
    p *= (t - RatPoly::constant(Rational(m)));
    denom *= Rational(2 - 2 * g - m);
  }
  return p * denom.inverse();
}

}  // namespace su2cert
