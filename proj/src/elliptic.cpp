#include "loopnet/elliptic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace loopnet {

WeierstrassCurve::WeierstrassCurve(std::int64_t a, std::int64_t b, std::uint32_t p) : a_(a, p), b_(b, p), p_(p) {
  if (!is_prime(p) || p < 5) throw Error(Errc::BadParameter, "short Weierstrass form needs a prime p >= 5");
  const Fp disc = Fp(4, p) * a_.pow(3) + Fp(27, p) * b_.pow(2);
  if (disc.is_zero()) throw Error(Errc::SingularCurve, "4A^3 + 27B^2 = 0");
}

ProjPoint<Fp> WeierstrassCurve::infinity() const { return make_point<Fp>(field(), 0, 1, 0); }

bool WeierstrassCurve::contains(const ProjPoint<Fp>& pt) const { return form()(pt).is_zero(); }

CubicForm<Fp> WeierstrassCurve::form() const {
  // -x^3 + y^2 z - A x z^2 - B z^3, then canonicalized.
  VectorX<Fp> c = VectorX<Fp>::Constant(10, Fp(0, p_));
  c(0) = Fp(-1, p_);
  c(7) = Fp(1, p_);
  c(5) = -a_;
  c(9) = -b_;
  return CubicForm<Fp>(3, std::move(c));
}

namespace {

void require_on(const WeierstrassCurve& c, const ProjPoint<Fp>& pt) {
  if (!c.contains(pt)) throw Error(Errc::PointNotOnCurve, "point is not on the curve");
}

bool at_infinity(const ProjPoint<Fp>& pt) { return pt[2].is_zero(); }

}  // namespace

std::vector<ProjPoint<Fp>> ec_points(const WeierstrassCurve& c) {
  const auto p = c.p();
  std::vector<ProjPoint<Fp>> pts;
  for (std::uint32_t x = 0; x < p; ++x) {
    const Fp fx(x, p);
    const Fp rhs = fx * fx * fx + c.a() * fx + c.b();
    for (std::uint32_t y = 0; y < p; ++y) {
      const Fp fy(y, p);
      if (fy * fy == rhs) pts.emplace_back(fx, fy, Fp(1, p));
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.insert(pts.begin(), c.infinity());
  return pts;
}

ProjPoint<Fp> ec_negate(const WeierstrassCurve& c, const ProjPoint<Fp>& pt) {
  require_on(c, pt);
  if (at_infinity(pt)) return pt;
  return ProjPoint<Fp>(pt[0], -pt[1], pt[2]);
}

ProjPoint<Fp> ec_add(const WeierstrassCurve& c, const ProjPoint<Fp>& p, const ProjPoint<Fp>& q) {
  require_on(c, p);
  require_on(c, q);
  if (at_infinity(p)) return q;
  if (at_infinity(q)) return p;
  const std::uint32_t m = c.p();
  const Fp x1 = p[0] / p[2], y1 = p[1] / p[2], x2 = q[0] / q[2], y2 = q[1] / q[2];
  Fp slope;
  if (x1 == x2) {
    if (!(y1 == y2) || y1.is_zero()) return c.infinity();
    slope = (Fp(3, m) * x1 * x1 + c.a()) / (Fp(2, m) * y1);
  } else {
    slope = (y2 - y1) / (x2 - x1);
  }
  const Fp x3 = slope * slope - x1 - x2;
  const Fp y3 = slope * (x1 - x3) - y1;
  return ProjPoint<Fp>(x3, y3, Fp(1, m));
}

ProjPoint<Fp> ec_multiply(const WeierstrassCurve& c, const ProjPoint<Fp>& p, std::int64_t k) {
  ProjPoint<Fp> base = k < 0 ? ec_negate(c, p) : p;
  if (k < 0) k = -k;
  ProjPoint<Fp> acc = c.infinity();
  while (k) {
    if (k & 1) acc = ec_add(c, acc, base);
    base = ec_add(c, base, base);
    k >>= 1;
  }
  return acc;
}

int ec_order(const WeierstrassCurve& c, const ProjPoint<Fp>& p) {
  require_on(c, p);
  int k = 1;
  for (auto acc = p; !at_infinity(acc); acc = ec_add(c, acc, p)) ++k;
  return k;
}

std::vector<int> ec_group_structure(const WeierstrassCurve& c) {
  const auto pts = ec_points(c);
  const int n = static_cast<int>(pts.size());
  std::map<int, int> observed;
  for (const auto& pt : pts) ++observed[ec_order(c, pt)];
  // C_a x C_b with a | b is determined by its element-order counts.
  for (int a = 1; a * a <= n; ++a) {
    if (n % a || (n / a) % a) continue;
    const int b = n / a;
    std::map<int, int> expected;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) {
        const int oi = a / std::gcd(i, a), oj = b / std::gcd(j, b);
        ++expected[std::lcm(oi, oj)];
      }
    if (expected == observed) return a == 1 ? std::vector<int>{b} : std::vector<int>{a, b};
  }
  throw std::logic_error("curve group is not a product of at most two cyclic groups");
}

std::vector<ProjPoint<Fp>> ec_subgroup(const WeierstrassCurve& c, const std::vector<ProjPoint<Fp>>& generators) {
  std::set<ProjPoint<Fp>> seen{c.infinity()};
  std::vector<ProjPoint<Fp>> frontier{c.infinity()};
  for (const auto& g : generators) require_on(c, g);
  while (!frontier.empty()) {
    std::vector<ProjPoint<Fp>> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        auto y = ec_add(c, x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<ProjPoint<Fp>> out{c.infinity()};
  for (const auto& x : seen)
    if (!(x == c.infinity())) out.push_back(x);
  return out;
}

}  // namespace loopnet
