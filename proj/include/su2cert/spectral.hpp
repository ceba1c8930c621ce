#pragma once

#include <vector>

#include "su2cert/matrix.hpp"

namespace su2cert {

struct Eigenvalue {
  GaussianRational value;
  long multiplicity;  // dimension of the generalized eigenspace
};

/// dim ker (A - lambda)^N, the generalized eigenspace dimension.
long generalized_eigenspace_dim(const GaussMatrix& a, const GaussianRational& lambda);

/// det(tI - A), exact (Faddeev-LeVerrier).
GaussPoly char_poly(const GaussMatrix& a);

/// Finds the spectrum of A among the candidate values 0, +-2k, +-2ki
/// (k = 1..kmax), by generalized-eigenspace dimension counts. Throws if the
/// multiplicities do not exhaust the dimension, i.e. the spectrum falls
/// outside the supported family. General root finding over Q[i] is out of
/// scope; callers with other spectra must pass it explicitly.
std::vector<Eigenvalue> spectrum_in_mu_family(const GaussMatrix& a, long kmax);

/// Same, with kmax derived from an entry-size bound on the eigenvalues.
std::vector<Eigenvalue> spectrum_in_mu_family(const GaussMatrix& a);

/// The projection-polynomial construction: given lambda1 (a real rational
/// eigenvalue), the rest of the spectrum, and extra values to kill, returns
/// p in Q[t] with p(lambda1) = 1, p(d) = 0 for every d in `avoid`, and p(A)
/// the projection onto the generalized lambda1-eigenspace along the others.
/// Built as f = prod(t - d_j) * prod_{j >= 2} (t - lambda_j)^{m_j},
/// g = f * conj(f), h = inverse of g mod (t - lambda1)^{m_1}, p = h * g.
RatPoly projection_polynomial_from_spectrum(const std::vector<Eigenvalue>& spectrum,
                                            const Rational& lambda1,
                                            std::vector<GaussianRational> avoid,
                                            long lambda1_multiplicity_floor = 0);

/// Convenience entry point that finds the spectrum itself (mu family only).
/// Throws if lambda1 is not an eigenvalue of A.
RatPoly projection_polynomial(const GaussMatrix& a, const Rational& lambda1,
                              const std::vector<GaussianRational>& avoid);

/// The distinguished projection polynomial for a genus-g spectrum:
/// p(2-2g) = 1, p(m) = 0 for m = 3-2g..2g-2, and p(A) is the projection
/// onto the generalized (2-2g)-eigenspace. Requires every eigenvalue of A to
/// be of the form +-2k or +-2ki with 0 <= k <= g-1.
RatPoly pbot(const GaussMatrix& a, long g);

/// Matrix-free variant: the minimal-degree polynomial through the same value
/// constraints (Lagrange interpolation through the 4g-3 points).
RatPoly pbot_poly(long g);

/// Taylor shift: coefficients of p(t + c).
RatPoly taylor_shift(const RatPoly& p, const Rational& c);

/// Power-series inverse of p (constant term nonzero) truncated mod t^order.
RatPoly series_inverse(const RatPoly& p, long order);

}  // namespace su2cert
