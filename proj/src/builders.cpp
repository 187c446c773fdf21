#include "loopnet/builders.hpp"

#include <algorithm>
#include <set>

#include "loopnet/catalog.hpp"
#include "loopnet/engine.hpp"

namespace loopnet {

namespace {

BuiltNet checked(DualNet<Fp> net, LoopTable loop, Errc on_failure) {
  const auto report = verify(net, true, &loop);
  if (!report.pass) throw Error(on_failure, describe(*report.counterexample));
  return {std::move(net), std::move(loop)};
}

Fp nonzero_shift(std::int64_t s, std::uint32_t p) {
  Fp f(s, p);
  if (f.is_zero()) throw Error(Errc::BadParameter, "shift must be nonzero mod p");
  return f;
}

bool in_roots(const Fp& x, const std::vector<Fp>& mu) { return std::find(mu.begin(), mu.end(), x) != mu.end(); }

std::string abelian_name(const LoopTable& loop) {
  const auto inv = abelian_invariants(loop);
  if (!inv || inv->empty()) return "C1";
  std::string name;
  for (int f : *inv) name += (name.empty() ? "C" : "xC") + std::to_string(f);
  return name;
}

}  // namespace

BuiltNet triangular(int d, std::uint32_t p, std::int64_t s1, std::int64_t s2) {
  const auto mu = roots_of_unity(d, p);
  const Fp a = nonzero_shift(s1, p), b = nonzero_shift(s2, p);
  const Fp zero(0, p), one(1, p);
  DualNet<Fp> net{Field{p}, d, {}};
  for (int i = 0; i < d; ++i) {
    net.comps[0].emplace_back(zero, one, a * mu[i]);
    net.comps[1].emplace_back(b * mu[i], zero, one);
    net.comps[2].emplace_back(one, -(a * b * mu[i]).inverse(), zero);
  }
  return checked(std::move(net), cyclic(d), Errc::DegenerateParameters);
}

BuiltNet conic_line(int d, std::uint32_t p, std::int64_t s1, std::optional<std::int64_t> s2) {
  const auto mu = roots_of_unity(d, p);
  const Fp a = nonzero_shift(s1, p);
  Fp b;
  if (s2) {
    b = nonzero_shift(*s2, p);
    if (in_roots(a / b, mu)) throw Error(Errc::CosetOverlap, "s1/s2 is a d-th root of unity");
  } else {
    std::uint32_t t = 1;
    while (t < p && in_roots(a / Fp(t, p), mu)) ++t;
    if (t == p) throw Error(Errc::CosetOverlap, "mu_d has no second coset in GF(p)*");
    b = Fp(t, p);
  }
  const Fp zero(0, p), one(1, p);
  DualNet<Fp> net{Field{p}, d, {}};
  for (int i = 0; i < d; ++i) {
    const Fp ta = a * mu[i], tb = b * mu[i];
    net.comps[0].emplace_back(one, ta, ta * ta);
    net.comps[1].emplace_back(one, tb, tb * tb);
    net.comps[2].emplace_back(one, zero, -(a * b * mu[i]));
  }
  return checked(std::move(net), cyclic(d), Errc::DegenerateParameters);
}

BuiltNet elliptic(const WeierstrassCurve& curve, const std::vector<ProjPoint<Fp>>& generators,
                  const ProjPoint<Fp>& c1, const ProjPoint<Fp>& c2) {
  const auto group = ec_subgroup(curve, generators);
  const auto c3 = ec_negate(curve, ec_add(curve, c1, c2));
  const std::array<ProjPoint<Fp>, 3> shifts{c1, c2, c3};
  std::array<std::set<ProjPoint<Fp>>, 3> cosets;
  for (int c = 0; c < 3; ++c)
    for (const auto& g : group) cosets[c].insert(ec_add(curve, g, shifts[c]));
  for (int c = 0; c < 3; ++c)
    for (const auto& pt : cosets[c])
      if (cosets[(c + 1) % 3].count(pt)) throw Error(Errc::CosetOverlap, "shifted subgroup cosets intersect");

  const int n = static_cast<int>(group.size());
  auto index_of = [&](const ProjPoint<Fp>& pt) {
    return static_cast<int>(std::find(group.begin(), group.end(), pt) - group.begin());
  };
  LoopTable loop = make_table(n, [&](int x, int y) { return index_of(ec_add(curve, group[x], group[y])); });
  loop.set_name(abelian_name(loop));

  DualNet<Fp> net{curve.field(), n, {}};
  for (const auto& g : group) {
    net.comps[0].push_back(ec_add(curve, g, c1));
    net.comps[1].push_back(ec_add(curve, g, c2));
    net.comps[2].push_back(ec_add(curve, ec_negate(curve, g), c3));
  }
  return checked(std::move(net), std::move(loop), Errc::DegenerateParameters);
}

BuiltNet elliptic_auto(const WeierstrassCurve& curve) {
  const auto pts = ec_points(curve);
  const int total = static_cast<int>(pts.size());
  std::set<std::vector<ProjPoint<Fp>>> subgroups;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j) {
      auto g = ec_subgroup(curve, {pts[i], pts[j]});
      std::sort(g.begin(), g.end());
      subgroups.insert(std::move(g));
    }
  std::vector<std::vector<ProjPoint<Fp>>> ranked(subgroups.begin(), subgroups.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });

  for (const auto& sub : ranked) {
    if (total / static_cast<int>(sub.size()) < 3) continue;
    const std::set<ProjPoint<Fp>> members(sub.begin(), sub.end());
    // Cosets g+H and h+H coincide iff g - h lies in H.
    auto same_coset = [&](const ProjPoint<Fp>& g, const ProjPoint<Fp>& h) {
      return members.count(ec_add(curve, g, ec_negate(curve, h))) > 0;
    };
    for (const auto& c1 : pts)
      for (const auto& c2 : pts) {
        const auto c3 = ec_negate(curve, ec_add(curve, c1, c2));
        if (same_coset(c1, c2) || same_coset(c1, c3) || same_coset(c2, c3)) continue;
        return elliptic(curve, sub, c1, c2);
      }
  }
  throw Error(Errc::CosetOverlap, "no subgroup admits three disjoint cosets");
}

BuiltNet tetrahedron(int d, std::uint32_t p, std::optional<std::int64_t> beta0) {
  if (d < 3) throw Error(Errc::DOrderTooSmall, "tetrahedron nets need d >= 3");
  const auto mu = roots_of_unity(d, p);
  const Fp zero(0, p), one(1, p);
  const LoopTable dih = dihedral(d);

  auto build = [&](const Fp& b) {
    DualNet<Fp> net{Field{p}, 2 * d, {}};
    for (auto& comp : net.comps) comp.resize(static_cast<std::size_t>(2 * d));
    for (int a = 0; a < d; ++a) {
      const Fp u = mu[a];
      // g^a on the triangle PQR, g^a h on the edges through S.
      net.comps[0][a] = ProjPoint<Fp>(zero, one, u);
      net.comps[1][a] = ProjPoint<Fp>(u, zero, one);
      net.comps[2][a] = ProjPoint<Fp>(one, -u.inverse(), zero);
      net.comps[0][d + a] = ProjPoint<Fp>(one - b * u, one, one);
      net.comps[1][d + a] = ProjPoint<Fp>(one, one - b * u, one);
      net.comps[2][d + a] = ProjPoint<Fp>(one, one, one + b * u);
    }
    return net;
  };

  if (beta0) {
    const Fp b(*beta0, p);
    if (b.is_zero() || b.pow(d) == one)
      throw Error(Errc::NoValidBeta, "beta0 must be nonzero and not a d-th root of unity");
    return checked(build(b), dih, Errc::NoValidBeta);
  }
  for (std::uint32_t t = 1; t < p; ++t) {
    const Fp b(t, p);
    if (b.pow(d) == one) continue;
    auto net = build(b);
    if (verify(net, true, &dih).pass) return {std::move(net), dih};
  }
  throw Error(Errc::NoValidBeta, "no beta0 in GF(" + std::to_string(p) + ") yields a verified net");
}

BuiltNet pencil(std::uint32_t p, std::optional<int> n) {
  if (!is_prime(p)) throw Error(Errc::BadParameter, "modulus is not prime");
  if (n && *n != static_cast<int>(p))
    throw Error(Errc::UnsupportedPencil, "concurrent-line nets realize only the additive group of order p");
  const Fp zero(0, p), one(1, p);
  const int order = static_cast<int>(p);
  DualNet<Fp> net{Field{p}, order, {}};
  for (int a = 0; a < order; ++a) {
    const Fp x(a, p);
    net.comps[0].emplace_back(zero, one, -x);
    net.comps[1].emplace_back(one, one, x);
    net.comps[2].emplace_back(one, zero, x);
  }
  return checked(std::move(net), cyclic(order), Errc::DegenerateParameters);
}

}  // namespace loopnet
