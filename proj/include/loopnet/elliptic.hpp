#pragma once

#include <cstdint>
#include <vector>

#include "loopnet/projective.hpp"

namespace loopnet {

/// y^2 z = x^3 + A x z^2 + B z^3 over GF(p), p >= 5, nonsingular.
class WeierstrassCurve {
 public:
  WeierstrassCurve(std::int64_t a, std::int64_t b, std::uint32_t p);

  const Fp& a() const noexcept { return a_; }
  const Fp& b() const noexcept { return b_; }
  std::uint32_t p() const noexcept { return p_; }
  Field field() const noexcept { return Field{p_}; }

  ProjPoint<Fp> infinity() const;
  bool contains(const ProjPoint<Fp>& pt) const;
  CubicForm<Fp> form() const;

 private:
  Fp a_, b_;
  std::uint32_t p_;
};

/// All points, (0:1:0) first, then affine points in canonical order.
std::vector<ProjPoint<Fp>> ec_points(const WeierstrassCurve& c);
ProjPoint<Fp> ec_add(const WeierstrassCurve& c, const ProjPoint<Fp>& p, const ProjPoint<Fp>& q);
ProjPoint<Fp> ec_negate(const WeierstrassCurve& c, const ProjPoint<Fp>& p);
ProjPoint<Fp> ec_multiply(const WeierstrassCurve& c, const ProjPoint<Fp>& p, std::int64_t k);
int ec_order(const WeierstrassCurve& c, const ProjPoint<Fp>& p);

/// Invariant factors n1 | n2 (one or two entries; {1} for the trivial group).
std::vector<int> ec_group_structure(const WeierstrassCurve& c);

/// Subgroup generated by the given points: O first, the rest in canonical order.
std::vector<ProjPoint<Fp>> ec_subgroup(const WeierstrassCurve& c, const std::vector<ProjPoint<Fp>>& generators);

}  // namespace loopnet
