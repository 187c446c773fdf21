#include "loopnet/projective.hpp"

namespace loopnet {

std::vector<Fp> roots_of_unity(int d, std::uint32_t p) {
  if (!is_prime(p)) throw Error(Errc::BadParameter, "modulus is not prime");
  if (d < 1 || (p - 1) % static_cast<std::uint32_t>(d) != 0)
    throw Error(Errc::NoSuchRoots, std::to_string(d) + " does not divide " + std::to_string(p) + "-1");
  Fp zeta(1, p);
  for (std::uint32_t t = 1; t < p && d > 1; ++t) {
    const Fp cand(t, p);
    bool primitive = cand.pow(d) == Fp(1, p);
    for (int k = 1; primitive && k < d; ++k)
      if (cand.pow(k) == Fp(1, p)) primitive = false;
    if (primitive) {
      zeta = cand;
      break;
    }
  }
  std::vector<Fp> roots;
  Fp acc(1, p);
  for (int k = 0; k < d; ++k, acc *= zeta) roots.push_back(acc);
  return roots;
}

std::vector<ProjPoint<Fp>> plane_points(std::uint32_t p) {
  std::vector<ProjPoint<Fp>> pts;
  pts.reserve(static_cast<std::size_t>(p) * p + p + 1);
  const Fp zero(0, p), one(1, p);
  for (std::uint32_t y = 0; y < p; ++y)
    for (std::uint32_t z = 0; z < p; ++z) pts.emplace_back(one, Fp(y, p), Fp(z, p));
  for (std::uint32_t z = 0; z < p; ++z) pts.emplace_back(zero, one, Fp(z, p));
  pts.emplace_back(zero, zero, one);
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace loopnet
