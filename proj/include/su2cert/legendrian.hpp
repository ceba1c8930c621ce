#pragma once

#include <set>
#include <vector>

#include "su2cert/matrix.hpp"

namespace su2cert {

/// Legendrian knot data: Thurston-Bennequin and rotation numbers. The
/// contact framing for surgery is tb - 1; reversing orientation negates rot.
struct LegendrianComponent {
  long tb = 0;
  long rot = 0;
  bool reversed = false;

  LegendrianComponent stabilize(int sign) const {
    if (sign != 1 && sign != -1)
      throw std::invalid_argument("stabilize: sign must be +-1");
    return {tb - 1, rot + sign, reversed};
  }
  LegendrianComponent reverse() const { return {tb, -rot, !reversed}; }
  long framing() const { return tb - 1; }
};

/// Rotation numbers reachable from rotation number rot0 by exactly `count`
/// stabilizations: rot0 - count + 2k for k = 0..count (the common
/// Thurston-Bennequin number drops by count).
std::vector<long> stabilization_fan(long rot0, long count);

struct RotationSpectrum {
  std::set<long> values;  // exactly enumerated, orientation reversals included
  long guaranteed;        // certified lower bound for the count
  long tb;                // common Thurston-Bennequin number (= -n+1)
};

/// Rotation numbers of representatives at tb = -n+1 obtained by stabilizing
/// a representative with tb_max - rot_at_max = sl >= 0 and rot_at_max <= 0,
/// together with their orientation reverses. When the reachable range
/// straddles zero (n > 1 - tb_max - rot_at_max) the union covers every
/// integer of the right parity in [-(sl+n-1), sl+n-1], which has exactly
/// sl + n elements; otherwise the guarantee falls back to the enumerated
/// count.
RotationSpectrum rotation_spectrum(long tb_max, long rot_at_max, long n);

/// Stein 2-handlebody model: Legendrian components and their smooth pairwise
/// linking numbers. The framed linking matrix puts tb-1 on the diagonal; its
/// absolute determinant is the first-homology order of the boundary.
struct SteinHandlebodyModel {
  std::vector<LegendrianComponent> components;
  IntMatrix smooth_linking;  // symmetric; diagonal ignored

  void validate() const;
  IntMatrix framed_matrix() const;
  std::vector<long> chern_vector() const;  // (rot_i), by Gompf's formula
};

std::vector<long> gompf_chern(const SteinHandlebodyModel& model);
bool chern_is_zero(const std::vector<long>& chern);

/// Number of pairwise-distinct Chern vectors; a lower bound for the rank of
/// the framed instanton homology of the boundary. The torsion_free flag
/// certifies that integral distinctness equals distinctness over the reals
/// (automatic for 2-handlebodies, whose second cohomology is free).
long rank_lower_bound_from_stein(const std::vector<std::vector<long>>& chern_vectors,
                                 bool torsion_free);

/// The k x k tridiagonal form with diagonal (-1, -2, ..., -2) and
/// off-diagonal 1: the framed linking matrix of a once-stabilized tb = 1
/// component with a chain of k-1 Legendrian unknots attached.
IntMatrix chain_linking_matrix(long k);

/// The two-chain Stein model for the zero-Casson surgery family: two
/// tb = 0 components of rotation number +-1 with linking number zero, each
/// carrying a chain of unknots (lengths m-1 and n-1). Framed matrix is the
/// block sum of chain matrices B_m and B_n.
SteinHandlebodyModel two_chain_model(long m, long n);

}  // namespace su2cert
