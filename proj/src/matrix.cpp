#include "su2cert/matrix.hpp"

#include <algorithm>

namespace su2cert {

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::negative_definite: return "negative_definite";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::degenerate: return "degenerate";
  }
  return "?";
}

Integer int_determinant(const IntMatrix& m) {
  Rational d = determinant(m.cast<Rational>());
  if (!d.is_integer()) throw std::logic_error("int_determinant: non-integer result");
  return d.numerator();
}

Inertia inertia(RatMatrix m) {
  if (!m.is_symmetric()) throw std::invalid_argument("inertia: matrix not symmetric");
  Inertia out;
  long n = m.rows();
  std::vector<long> live(n);
  for (long i = 0; i < n; ++i) live[i] = i;

  // Congruence reduction on the submatrix indexed by `live`.
  auto eliminate_with = [&](long p) {
    // Assumes m(p,p) != 0; clears row/col p among the live indices.
    Rational inv = m(p, p).inverse();
    for (long a : live) {
      if (a == p || m(a, p).is_zero()) continue;
      Rational f = m(a, p) * inv;
      for (long b : live) m(a, b) -= f * m(p, b);
      for (long b : live) m(b, a) = m(a, b);  // keep symmetric
    }
  };

  while (!live.empty()) {
    // Prefer a nonzero diagonal pivot.
    long p = -1;
    for (long idx : live)
      if (!m(idx, idx).is_zero()) {
        p = idx;
        break;
      }
    if (p >= 0) {
      (m(p, p).sign() > 0 ? out.positive : out.negative) += 1;
      eliminate_with(p);
      live.erase(std::find(live.begin(), live.end(), p));
      continue;
    }
    // All live diagonal entries are zero. A nonzero off-diagonal entry spans
    // a hyperbolic plane (one positive, one negative eigenvalue); none left
    // means the remaining block is identically zero.
    long a = -1, b = -1;
    for (size_t i = 0; i < live.size() && a < 0; ++i)
      for (size_t j = i + 1; j < live.size(); ++j)
        if (!m(live[i], live[j]).is_zero()) {
          a = live[i];
          b = live[j];
          break;
        }
    if (a < 0) {
      out.zero += static_cast<long>(live.size());
      break;
    }
    // Congruence x_a -> x_a + x_b puts 2*m(a,b) on the diagonal at a.
    for (long c : live) m(a, c) += m(b, c);
    for (long c : live) m(c, a) = m(a, c);
    m(a, a) = m(a, b) + m(b, a);  // = 2*m(a,b) after the row update
    (m(a, a).sign() > 0 ? out.positive : out.negative) += 1;
    eliminate_with(a);
    live.erase(std::find(live.begin(), live.end(), a));
  }
  return out;
}

Definiteness definiteness(const RatMatrix& m) {
  Inertia in = inertia(m);
  if (in.zero > 0) return Definiteness::degenerate;
  if (in.positive > 0 && in.negative > 0) return Definiteness::indefinite;
  if (in.negative > 0) return Definiteness::negative_definite;
  return Definiteness::positive_definite;  // includes the empty matrix
}

Definiteness definiteness(const IntMatrix& m) { return definiteness(m.cast<Rational>()); }

Integer h1_order(const IntMatrix& m) {
  Integer d = int_determinant(m);
  return abs(d);
}

bool is_even_form(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("is_even_form: matrix not symmetric");
  for (long i = 0; i < m.rows(); ++i)
    if (m(i, i) % 2 != 0) return false;
  return true;
}

namespace {

// One round of Smith reduction: clear row/column of the pivot position (k,k)
// using integer row/column operations.
bool smith_clear(IntMatrix& m, long k) {
  long n = m.rows(), c = m.cols();
  bool changed = false;
  for (;;) {
    // Move a minimal-|.|" nonzero entry of the trailing block to (k,k).
    long bi = -1, bj = -1;
    Integer best = 0;
    for (long i = k; i < n; ++i)
      for (long j = k; j < c; ++j) {
        if (m(i, j) == 0) continue;
        Integer a = abs(m(i, j));
        if (bi < 0 || a < best) {
          best = a;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) return changed;  // trailing block zero
    if (bi != k)
      for (long j = 0; j < c; ++j) std::swap(m(bi, j), m(k, j));
    if (bj != k)
      for (long i = 0; i < n; ++i) std::swap(m(i, bj), m(i, k));

    bool dirty = false;
    for (long i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Integer q = m(i, k) / m(k, k);  // truncated division is fine here
      for (long j = 0; j < c; ++j) m(i, j) -= q * m(k, j);
      if (m(i, k) != 0) dirty = true;
    }
    for (long j = k + 1; j < c; ++j) {
      if (m(k, j) == 0) continue;
      Integer q = m(k, j) / m(k, k);
      for (long i = 0; i < n; ++i) m(i, j) -= q * m(i, k);
      if (m(k, j) != 0) dirty = true;
    }
    changed = true;
    if (!dirty) return true;
  }
}

}  // namespace

CokernelStructure cokernel_structure(IntMatrix m) {
  long n = m.rows(), c = m.cols();
  long steps = std::min(n, c);
  std::vector<Integer> diag;
  for (long k = 0; k < steps; ++k) {
    smith_clear(m, k);
    if (m(k, k) == 0) break;
    diag.push_back(abs(m(k, k)));
  }
  // Enforce the divisibility chain d_1 | d_2 | ...
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      Integer g = gcd(diag[i], diag[j]);
      Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::sort(diag.begin(), diag.end());
  CokernelStructure out;
  out.free_rank = n - static_cast<long>(diag.size());
  for (const Integer& d : diag)
    if (d > 1) out.invariant_factors.push_back(d);
  return out;
}

}  // namespace su2cert
