#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loopnet/dual_net.hpp"
#include "loopnet/elliptic.hpp"
#include "loopnet/loop.hpp"

namespace loopnet {

struct BuiltNet {
  DualNet<Fp> net;
  LoopTable loop;
};

// Every builder verifies its output (axiom plus labels against `loop`) before returning.

/// C_d on the coordinate triangle xyz = 0.
BuiltNet triangular(int d, std::uint32_t p, std::int64_t s1 = 1, std::int64_t s2 = 1);

/// C_d on the conic xz = y^2 and the line y = 0. s2 defaults to the least residue not in mu_d.
BuiltNet conic_line(int d, std::uint32_t p, std::int64_t s1 = 1, std::optional<std::int64_t> s2 = std::nullopt);

/// The subgroup generated by `generators` on the curve, shifted into three cosets by c1, c2, -(c1 + c2).
BuiltNet elliptic(const WeierstrassCurve& curve, const std::vector<ProjPoint<Fp>>& generators,
                  const ProjPoint<Fp>& c1, const ProjPoint<Fp>& c2);

/// Largest subgroup of index >= 3 whose three cosets can be made disjoint, with the least shifts.
BuiltNet elliptic_auto(const WeierstrassCurve& curve);

/// Dih_d on the six edges of the tetrahedron (1:0:0), (0:1:0), (0:0:1), (1:1:1).
/// Without beta0, the first residue that is neither 0 nor a d-th root of unity and verifies is used.
BuiltNet tetrahedron(int d, std::uint32_t p, std::optional<std::int64_t> beta0 = std::nullopt);

/// Additive C_p on the concurrent lines x = 0, x = y, y = 0. Any order other than p is refused.
BuiltNet pencil(std::uint32_t p, std::optional<int> n = std::nullopt);

}  // namespace loopnet
