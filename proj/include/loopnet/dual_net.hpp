#pragma once

#include <array>
#include <vector>

#include "loopnet/projective.hpp"

namespace loopnet {

/// Three point components; comps[c][x] is the point carrying loop label x (alpha, beta, gamma for c = 0, 1, 2).
template <typename Scalar>
struct DualNet {
  Field field;
  int n = 0;
  std::array<std::vector<ProjPoint<Scalar>>, 3> comps;

  const ProjPoint<Scalar>& alpha(int x) const { return comps[0][static_cast<std::size_t>(x)]; }
  const ProjPoint<Scalar>& beta(int x) const { return comps[1][static_cast<std::size_t>(x)]; }
  const ProjPoint<Scalar>& gamma(int x) const { return comps[2][static_cast<std::size_t>(x)]; }

  std::vector<ProjPoint<Scalar>> all_points() const {
    std::vector<ProjPoint<Scalar>> pts;
    for (const auto& c : comps) pts.insert(pts.end(), c.begin(), c.end());
    return pts;
  }

  friend bool operator==(const DualNet&, const DualNet&) = default;
};

/// The same linear substitution applied to every point.
template <typename Scalar>
DualNet<Scalar> transform(const DualNet<Scalar>& net, const Eigen::Matrix<Scalar, 3, 3>& m) {
  DualNet<Scalar> out = net;
  for (auto& comp : out.comps)
    for (auto& pt : comp) pt = ProjPoint<Scalar>(Vec3<Scalar>(m * pt.coords()));
  return out;
}

}  // namespace loopnet
