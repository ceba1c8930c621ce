#pragma once

#include <optional>
#include <string>
#include <vector>

#include "su2cert/slopes.hpp"

namespace su2cert {

/// Seifert data M(e; r_1, ..., r_k) over the sphere, in normal form: every
/// r_i = q_i/p_i with 0 < q_i < p_i and gcd(q_i, p_i) = 1, sorted ascending,
/// with integer parts absorbed into e (which keeps e + sum r_i fixed).
struct SeifertData {
  Integer e = 0;
  std::vector<Rational> fractions;

  static SeifertData normalized(Integer e, std::vector<Rational> fractions);
  /// Parses "M(e; q1/p1, ..., qk/pk)" and normalizes.
  static SeifertData parse(const std::string& text);

  size_t fiber_count() const { return fractions.size(); }
  std::string str() const;

  friend bool operator==(const SeifertData& a, const SeifertData& b) {
    return a.e == b.e && a.fractions == b.fractions;
  }
  friend bool operator!=(const SeifertData& a, const SeifertData& b) { return !(a == b); }
};

/// |H1| = p_1 ... p_k |e + sum q_i/p_i|; nullopt when that vanishes (b_1 > 0).
std::optional<Integer> seifert_h1(const SeifertData& d);

/// Orientation reversal: M(-e-k; 1-r_k, ..., 1-r_1), renormalized.
SeifertData seifert_reverse(const SeifertData& d);

/// Star-shaped Legendrian plumbing presentation. Built on the orientation
/// with central framing e <= -2 (redirecting through the reversal when
/// e >= -1 and k >= 3); the chains expand -1/r_i with all entries <= -2.
/// The c1_nonzero flag records whether a rotation number can be made nonzero,
/// i.e. e < -2 or some chain entry < -2. Lens-space data (k <= 2 with
/// e >= -1) is rejected.
struct SteinPlumbing {
  Integer central;
  std::vector<std::vector<Integer>> chains;
  bool c1_nonzero = false;
  bool built_on_reverse = false;
  long b2() const {
    long total = 1;
    for (const auto& c : chains) total += static_cast<long>(c.size());
    return total;
  }
};
SteinPlumbing seifert_stein_diagram(const SeifertData& d);

/// The Poincare-sphere data M(-2; 1/2, 2/3, 4/5).
SeifertData poincare_sphere();
/// The M(-2; 1/2, 2/3, 6/7) exception, whose reversed orientation bounds a
/// Stein domain coming from a right-handed trefoil with tb = 0, rot = +-1.
SeifertData trefoil_exception();

/// True iff a plumbing with nonzero first Chern class exists on Y or -Y,
/// including the curated trefoil override for the M(-2;1/2,2/3,6/7) class.
bool seifert_c1_nonzero_filling(const SeifertData& d);

/// Instanton L-space classification for Seifert homology spheres: true iff
/// the data normalizes to the Poincare sphere with either orientation.
/// Requires |H1| = 1.
bool sfs_lspace_classify(const SeifertData& d);

/// All normalized Seifert homology spheres with k >= 3 exceptional fibers
/// and all multiplicities p_i <= pmax (both orientations appear).
std::vector<SeifertData> enumerate_homology_spheres(long pmax);

}  // namespace su2cert
