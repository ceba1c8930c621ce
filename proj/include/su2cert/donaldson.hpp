#pragma once

#include <vector>

#include "su2cert/gaussexp.hpp"
#include "su2cert/matrix.hpp"

namespace su2cert {

/// One exponential summand of a structured series: coefficient alpha != 0,
/// pairing a with the distinguished genus-g surface (negatively oriented),
/// pairing k with the auxiliary homology class.
struct BasicClassRecord {
  Rational alpha;
  Rational a;
  Rational k;
};

/// Symbolic model of a series e^{Q t^2/2} sum_r alpha_r e^{a_r s + k_r t}
/// subject to the structural constraints: |a_r| <= 2g-2 for every r, and
/// exactly one r with a_r = 2-2g (the canonical class).
struct DonaldsonSeriesModel {
  long genus = 2;
  Rational q_sigma;
  std::vector<BasicClassRecord> classes;

  void validate() const;
  /// Index of the unique class with a = 2-2g.
  size_t canonical_index() const;
  Rational canonical_k() const { return classes[canonical_index()].k; }
  GaussExpSum series() const;
};

/// Entry (i,j) = [pbot_poly(g)(d/ds) d_i F_j](s=0, t=0), computed exactly in
/// closed form. For valid model families this is diag(alpha_1,...,alpha_n).
/// All models must share genus and q_sigma, and the canonical k values must
/// be pairwise distinct.
RatMatrix orthogonality_matrix(const std::vector<DonaldsonSeriesModel>& models);

/// Deterministic integral vector x with all pairings c_i . x pairwise
/// distinct: tries moment vectors (1, M, M^2, ...) for M = 1, 2, ....
/// A single input vector yields the zero vector (no constraint to satisfy).
std::vector<Integer> distinct_pairing_vector(const std::vector<std::vector<Rational>>& cs);

}  // namespace su2cert
