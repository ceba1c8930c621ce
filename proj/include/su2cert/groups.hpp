#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su2cert/laurent.hpp"
#include "su2cert/matrix.hpp"

namespace su2cert {

/// Finite abelian group as invariant factors d_1 | d_2 | ... | d_m, each
/// >= 2; the empty list is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Validates the divisibility chain.
  static FiniteAbelianGroup from_invariant_factors(std::vector<Integer> factors);
  /// Canonicalizes an arbitrary product of cyclic groups.
  static FiniteAbelianGroup from_cyclic_factors(const std::vector<Integer>& orders);
  static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(); }
  static FiniteAbelianGroup cyclic(const Integer& n);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }
  /// #{x : 2x = 0} = prod gcd(d_i, 2).
  Integer two_torsion_count() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

  std::string str() const;

 private:
  std::vector<Integer> factors_;
};

/// Conjugacy classes of representations with abelian image, counted through
/// characters paired with their inverses, and the total homology rank of the
/// representation variety when all representations are abelian:
/// classes = t + (|H| - t)/2 with t the two-torsion count; rank = |H|.
struct ReducibleCount {
  Integer conjugacy_classes;
  Integer homology_rank;
};
ReducibleCount reducible_classes(const FiniteAbelianGroup& h);

/// (2/phi(n)) sum_{d | n} mu(n/d) b1(d), the twisted first-cohomology
/// dimension from the first Betti numbers of the cyclic covers. The b1 map
/// must cover every divisor of n. Negative or fractional output throws
/// (inconsistent input data); violations of the transfer monotonicity
/// b1(d) <= b1(n) for d | n are reported as warnings.
struct BoyerNicasResult {
  Rational value;
  std::vector<std::string> warnings;
};
BoyerNicasResult boyer_nicas_dim(long n, const std::map<long, Integer>& b1);

/// 3 - dim Z(rho) + dim H^1, the Zariski tangent dimension at a reducible
/// representation; the centralizer dimension is 3 for central image and 1
/// otherwise.
long tangent_dim(long dim_centralizer, long dim_h1);

/// Cyclic of prime-power order, Z/2 + Z/2, or order at most 5: the cases
/// where reducibles are automatically tame.
bool small_h1_cyclic_finite(const FiniteAbelianGroup& h);

/// True iff no |p|-th root of unity is a zero of Delta(t^2): the
/// cyclical-finiteness test for p/q-surgeries. p must be nonzero.
bool cyclically_finite_surgery(const RatPoly& alexander, const Integer& p);

}  // namespace su2cert
