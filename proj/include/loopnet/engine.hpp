#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "loopnet/dual_net.hpp"
#include "loopnet/loop.hpp"

namespace loopnet {

struct Counterexample {
  // The offending line, as the pair of points that span it: (component, label) each.
  int comp_a = 0, label_a = 0, comp_b = 0, label_b = 0;
  std::array<int, 3> incidences{};  // points of each component on that line
  std::string what;
};

struct VerifyReport {
  bool pass = false;
  std::optional<Counterexample> counterexample;
  std::optional<LoopTable> table;  // label table a*b = c, when the labels form a loop
};

namespace detail {

inline std::string name_point(int comp, int label) {
  static constexpr const char* kNames[3] = {"alpha", "beta", "gamma"};
  return std::string(kNames[comp]) + "(" + std::to_string(label) + ")";
}

}  // namespace detail

inline std::string describe(const Counterexample& ce) {
  std::ostringstream os;
  os << ce.what << ": line " << detail::name_point(ce.comp_a, ce.label_a) << " "
     << detail::name_point(ce.comp_b, ce.label_b) << " meets components " << ce.incidences[0] << "/"
     << ce.incidences[1] << "/" << ce.incidences[2] << " times";
  return os.str();
}

/// Exhaustive check of the dual 3-net axiom. With `check_labels` the collinearity table
/// must also be a loop with unit label 0; a supplied `expected` table must match it exactly.
template <typename Scalar>
VerifyReport verify(const DualNet<Scalar>& net, bool check_labels = true, const LoopTable* expected = nullptr) {
  const int n = net.n;
  for (const auto& comp : net.comps)
    if (static_cast<int>(comp.size()) != n) throw Error(Errc::SizeMismatch, "component size differs from n");
  VerifyReport report;
  auto fail = [&](int ca, int la, int cb, int lb, std::array<int, 3> inc, std::string what) {
    report.counterexample = Counterexample{ca, la, cb, lb, inc, std::move(what)};
    return report;
  };

  // (i) all 3n points distinct
  std::vector<std::pair<ProjPoint<Scalar>, std::pair<int, int>>> tagged;
  for (int c = 0; c < 3; ++c)
    for (int x = 0; x < n; ++x) tagged.push_back({net.comps[c][x], {c, x}});
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    if (a.first < b.first) return true;
    if (b.first < a.first) return false;
    return a.second < b.second;
  });
  for (std::size_t i = 1; i < tagged.size(); ++i)
    if (tagged[i - 1].first == tagged[i].first) {
      const auto [ca, la] = tagged[i - 1].second;
      const auto [cb, lb] = tagged[i].second;
      return fail(ca, la, cb, lb, {}, "coincident points");
    }

  // (ii) every cross line meets each component exactly once
  std::vector<std::vector<int>> third(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  static constexpr std::array<std::array<int, 3>, 3> kPairs = {{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& [ca, cb, cc] : kPairs) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const auto line = line_through(net.comps[ca][x], net.comps[cb][y]);
        std::array<int, 3> inc{};
        int hit = -1;
        for (int c = 0; c < 3; ++c)
          for (int z = 0; z < n; ++z)
            if (incident(net.comps[c][z], line)) {
              ++inc[c];
              if (c == cc) hit = z;
            }
        if (inc[0] != 1 || inc[1] != 1 || inc[2] != 1) return fail(ca, x, cb, y, inc, "axiom violated");
        if (ca == 0 && cb == 1) third[x][y] = hit;
      }
  }

  if (check_labels) {
    try {
      report.table = validate_table(third);
    } catch (const Error& e) {
      return fail(0, 0, 1, 0, {1, 1, 1}, std::string("labels do not form a loop with unit 0 (") + e.what() + ")");
    }
    if (expected) {
      if (expected->order() != n) throw Error(Errc::SizeMismatch, "expected table has the wrong order");
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if ((*expected)(a, b) != (*report.table)(a, b))
            return fail(0, a, 1, b, {1, 1, 1},
                        "broken product " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                            std::to_string((*expected)(a, b)) + " but the line meets gamma(" +
                            std::to_string((*report.table)(a, b)) + ")");
    }
  }
  report.pass = true;
  return report;
}

/// Quasigroup of the net normalized to a loop through alpha[i0], beta[j0]
/// (principal isotope); the unit is relabeled to 0.
template <typename Scalar>
LoopTable recover_loop(const DualNet<Scalar>& net, int i0 = 0, int j0 = 0) {
  const int n = net.n;
  if (i0 < 0 || i0 >= n || j0 < 0 || j0 >= n) throw Error(Errc::BadParameter, "normalizing index out of range");
  std::vector<std::vector<int>> q(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (net.alpha(x) == net.beta(y)) throw Error(Errc::IncidenceIncomplete, "coincident alpha and beta points");
      const auto line = line_through(net.alpha(x), net.beta(y));
      for (int z = 0; z < n; ++z)
        if (incident(net.gamma(z), line)) {
          if (q[x][y] != -1) throw Error(Errc::IncidenceIncomplete, "line meets gamma twice");
          q[x][y] = z;
        }
      if (q[x][y] == -1) throw Error(Errc::IncidenceIncomplete, "line misses gamma");
    }
  // rho(u) = Q(u, j0), lambda(v) = Q(i0, v); x o y = Q(rho^-1 x, lambda^-1 y).
  std::vector<int> rho_inv(static_cast<std::size_t>(n), -1), lambda_inv(static_cast<std::size_t>(n), -1);
  for (int u = 0; u < n; ++u) {
    rho_inv[q[u][j0]] = u;
    lambda_inv[q[i0][u]] = u;
  }
  if (std::count(rho_inv.begin(), rho_inv.end(), -1) || std::count(lambda_inv.begin(), lambda_inv.end(), -1))
    throw Error(Errc::IncidenceIncomplete, "collinearity relation is not a quasigroup");
  const int e = q[i0][j0];
  auto relabel = [&](int k) { return k == e ? 0 : (k == 0 ? e : k); };
  std::vector<std::vector<int>> raw(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) raw[relabel(x)][relabel(y)] = relabel(q[rho_inv[x]][lambda_inv[y]]);
  return validate_table(raw);
}

/// Restriction of all three components to the labels in S, renumbered in sorted order.
template <typename Scalar>
DualNet<Scalar> subnet(const DualNet<Scalar>& net, const SubloopSet& s) {
  const auto report = verify(net);
  if (!report.pass || !report.table) throw Error(Errc::PreconditionUnmet, "subnet needs a verified labeled net");
  for (int x : s.elements)
    if (x < 0 || x >= net.n) throw Error(Errc::NotASubloop, "label out of range");
  if (s.elements.empty() || !is_subloop(*report.table, s.elements))
    throw Error(Errc::NotASubloop, "label set is not closed under the net's product");
  DualNet<Scalar> out;
  out.field = net.field;
  out.n = s.size();
  for (int c = 0; c < 3; ++c)
    for (int x : s.elements) out.comps[c].push_back(net.comps[c][x]);
  return out;
}

/// Basis of cubics through every point of the net; nullopt when none exists.
template <typename Scalar>
std::optional<std::vector<CubicForm<Scalar>>> is_algebraic(const DualNet<Scalar>& net) {
  auto basis = fit_curve(net.all_points(), 3);
  if (basis.empty()) return std::nullopt;
  return basis;
}

}  // namespace loopnet
