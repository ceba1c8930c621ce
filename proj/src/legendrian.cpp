#include "su2cert/legendrian.hpp"

#include <algorithm>

namespace su2cert {

std::vector<long> stabilization_fan(long rot0, long count) {
  if (count < 0) throw std::invalid_argument("stabilization_fan: negative count");
  std::vector<long> out;
  for (long k = 0; k <= count; ++k) out.push_back(rot0 - count + 2 * k);
  return out;
}

RotationSpectrum rotation_spectrum(long tb_max, long rot_at_max, long n) {
  long sl = tb_max - rot_at_max;
  if (sl < 0) throw std::invalid_argument("rotation_spectrum: needs tb - rot >= 0");
  if (rot_at_max > 0)
    throw std::invalid_argument("rotation_spectrum: rot at maximal tb must be <= 0");
  if (n < std::max(1 - tb_max, 0L))
    throw std::invalid_argument("rotation_spectrum: n too small to reach tb = -n+1");

  long count = n + tb_max - 1;  // stabilizations down to tb = -n+1
  RotationSpectrum out;
  out.tb = -n + 1;
  for (long r : stabilization_fan(rot_at_max, count)) {
    out.values.insert(r);
    out.values.insert(-r);
  }
  long lower = -sl - n + 1;
  long upper = n + tb_max + rot_at_max - 1;
  if (lower < 0 && upper > 0) {
    // ranges overlap: every integer of that parity in [-(sl+n-1), sl+n-1]
    out.guaranteed = sl + n;
  } else {
    out.guaranteed = static_cast<long>(out.values.size());
  }
  return out;
}

void SteinHandlebodyModel::validate() const {
  long n = static_cast<long>(components.size());
  if (smooth_linking.rows() != n || smooth_linking.cols() != n)
    throw std::invalid_argument("SteinHandlebodyModel: linking matrix shape mismatch");
  if (!smooth_linking.is_symmetric())
    throw std::invalid_argument("SteinHandlebodyModel: linking matrix not symmetric");
}

IntMatrix SteinHandlebodyModel::framed_matrix() const {
  validate();
  IntMatrix m = smooth_linking;
  for (size_t i = 0; i < components.size(); ++i)
    m(static_cast<long>(i), static_cast<long>(i)) = components[i].framing();
  return m;
}

std::vector<long> SteinHandlebodyModel::chern_vector() const {
  std::vector<long> out;
  for (const auto& c : components) out.push_back(c.rot);
  return out;
}

std::vector<long> gompf_chern(const SteinHandlebodyModel& model) {
  return model.chern_vector();
}

bool chern_is_zero(const std::vector<long>& chern) {
  return std::all_of(chern.begin(), chern.end(), [](long r) { return r == 0; });
}

long rank_lower_bound_from_stein(const std::vector<std::vector<long>>& chern_vectors,
                                 bool torsion_free) {
  if (!torsion_free)
    throw std::invalid_argument(
        "rank_lower_bound_from_stein: torsion could collapse distinct integral classes; "
        "pass torsion_free once certified");
  std::set<std::vector<long>> distinct(chern_vectors.begin(), chern_vectors.end());
  return static_cast<long>(distinct.size());
}

IntMatrix chain_linking_matrix(long k) {
  if (k < 1) throw std::invalid_argument("chain_linking_matrix: k must be >= 1");
  IntMatrix m(k, k);
  for (long i = 0; i < k; ++i) {
    m(i, i) = i == 0 ? -1 : -2;
    if (i + 1 < k) {
      m(i, i + 1) = 1;
      m(i + 1, i) = 1;
    }
  }
  return m;
}

SteinHandlebodyModel two_chain_model(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("two_chain_model: m, n must be >= 1");
  SteinHandlebodyModel model;
  long total = m + n;
  model.smooth_linking = IntMatrix(total, total);
  auto add_chain = [&](long at, long len, long rot_head) {
    // head: once-stabilized tb = 0 component (surgery framing -1)
    model.components.push_back({0, rot_head, false});
    for (long i = 1; i < len; ++i) model.components.push_back({-1, 0, false});
    for (long i = 0; i + 1 < len; ++i) {
      model.smooth_linking(at + i, at + i + 1) = 1;
      model.smooth_linking(at + i + 1, at + i) = 1;
    }
  };
  add_chain(0, m, 1);
  add_chain(m, n, -1);
  return model;
}

}  // namespace su2cert
