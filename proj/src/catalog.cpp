#include "loopnet/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace loopnet {

LoopTable cyclic(int n) {
  if (n < 1) throw Error(Errc::BadParameter, "cyclic order must be >= 1");
  return make_table(n, [n](int a, int b) { return (a + b) % n; }, "C" + std::to_string(n));
}

LoopTable product(int a, int b) {
  if (a < 1 || b < 1) throw Error(Errc::BadParameter, "product factors must be >= 1");
  auto loop = direct_product(cyclic(a), cyclic(b));
  loop.set_name("C" + std::to_string(a) + "xC" + std::to_string(b));
  return loop;
}

LoopTable dihedral(int d) {
  if (d < 2) throw Error(Errc::BadParameter, "dihedral degree must be >= 2");
  // g^a h^s * g^b h^t = g^{a + (-1)^s b} h^{s + t}
  return make_table(
      2 * d,
      [d](int x, int y) {
        const int a = x % d, s = x / d, b = y % d, t = y / d;
        const int r = ((s ? a - b : a + b) % d + d) % d;
        return r + d * ((s + t) % 2);
      },
      "Dih_" + std::to_string(d));
}

namespace {

// Signed unit multiplication for a table of basis products; index 2k + s is (-1)^s e_k.
template <typename BasisMul>
LoopTable signed_units(int basis_count, BasisMul&& basis_mul, std::string name) {
  return make_table(
      2 * basis_count,
      [&](int x, int y) {
        const auto [sign, k] = basis_mul(x / 2, y / 2);
        const int s = (x % 2) ^ (y % 2) ^ (sign < 0 ? 1 : 0);
        return 2 * k + s;
      },
      std::move(name));
}

std::pair<int, int> triple_mul(std::span<const std::array<int, 3>> triples, int i, int j) {
  if (i == 0) return {1, j};
  if (j == 0) return {1, i};
  if (i == j) return {-1, 0};
  for (const auto& [a, b, c] : triples) {
    const int cyc[3] = {a, b, c};
    for (int r = 0; r < 3; ++r) {
      const int u = cyc[r], v = cyc[(r + 1) % 3], w = cyc[(r + 2) % 3];
      if (i == u && j == v) return {1, w};
      if (i == v && j == u) return {-1, w};
    }
  }
  throw Error(Errc::BadParameter, "basis pair not covered by the triple list");
}

std::vector<std::vector<int>> permutations(int m, bool even_only) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    int inversions = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (p[i] > p[j]) ++inversions;
    if (!even_only || inversions % 2 == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Permutation group in lexicographic order (identity first), product (st)(x) = s(t(x)).
LoopTable permutation_group(int m, bool even_only, std::string name) {
  const auto perms = permutations(m, even_only);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<int> tmp(static_cast<std::size_t>(m));
  return make_table(
      static_cast<int>(perms.size()),
      [&](int a, int b) {
        for (int x = 0; x < m; ++x) tmp[x] = perms[a][perms[b][x]];
        return index.at(tmp);
      },
      std::move(name));
}

}  // namespace

LoopTable quaternion8() {
  static constexpr std::array<std::array<int, 3>, 1> kIJK{{{1, 2, 3}}};
  return signed_units(4, [](int i, int j) { return triple_mul(kIJK, i, j); }, "Q8");
}

LoopTable octonion16() {
  return signed_units(8, [](int i, int j) { return triple_mul(kFanoTriples, i, j); }, "O16");
}

LoopTable alt4() { return permutation_group(4, true, "Alt4"); }
LoopTable sym4() { return permutation_group(4, false, "Sym4"); }
LoopTable alt5() { return permutation_group(5, true, "Alt5"); }

LoopTable elementary_abelian(int p, int rank) {
  if (p < 2 || rank < 1) throw Error(Errc::BadParameter, "elementary abelian needs p >= 2, rank >= 1");
  LoopTable out = cyclic(p);
  for (int i = 1; i < rank; ++i) out = direct_product(out, cyclic(p));
  out.set_name("C" + std::to_string(p) + "^" + std::to_string(rank));
  return out;
}

LoopTable make_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::cyclic: return cyclic(spec.a);
    case GroupKind::product: return product(spec.a, spec.b);
    case GroupKind::dihedral: return dihedral(spec.a);
    case GroupKind::quaternion8: return quaternion8();
    case GroupKind::alt4: return alt4();
    case GroupKind::sym4: return sym4();
    case GroupKind::alt5: return alt5();
  }
  throw Error(Errc::BadParameter, "unknown group kind");
}

LoopTable chein_double(const LoopTable& group, bool must_be_group) {
  if (must_be_group && !is_associative(group)) throw Error(Errc::NotAGroup, "Chein double needs a group");
  const int n = group.order();
  auto inv = [&](int g) { return group.left_div(g, 0); };
  std::string name = group.name().empty() ? std::string{} : "M(" + group.name() + ",2)";
  return make_table(
      2 * n,
      [&](int x, int y) {
        const int g = x % n, e = x / n, h = y % n, f = y / n;
        if (!e && !f) return group(g, h);
        if (!e && f) return group(h, g) + n;
        if (e && !f) return group(g, inv(h)) + n;
        return group(inv(h), g);
      },
      std::move(name));
}

void validate_sts(const TripleSystem& sts) {
  const int v = sts.point_count;
  if (v < 0) throw Error(Errc::NotAnSTS, "negative point count");
  std::vector<int> cover(static_cast<std::size_t>(v) * v, 0);
  for (const auto& blk : sts.blocks) {
    for (int x : blk)
      if (x < 0 || x >= v) throw Error(Errc::NotAnSTS, "block point out of range", x);
    if (blk[0] == blk[1] || blk[1] == blk[2] || blk[0] == blk[2])
      throw Error(Errc::NotAnSTS, "block with repeated point");
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) ++cover[static_cast<std::size_t>(blk[i]) * v + blk[j]];
  }
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) {
      const int c = cover[static_cast<std::size_t>(x) * v + y];
      if (c != 1)
        throw Error(Errc::NotAnSTS,
                    "pair {" + std::to_string(x) + "," + std::to_string(y) + "} lies in " + std::to_string(c) +
                        " blocks",
                    x);
    }
}

LoopTable steiner_from_sts(const TripleSystem& sts) {
  validate_sts(sts);
  const int v = sts.point_count;
  std::vector<int> third(static_cast<std::size_t>(v) * v, -1);
  for (const auto& [a, b, c] : sts.blocks) {
    third[static_cast<std::size_t>(a) * v + b] = third[static_cast<std::size_t>(b) * v + a] = c;
    third[static_cast<std::size_t>(a) * v + c] = third[static_cast<std::size_t>(c) * v + a] = b;
    third[static_cast<std::size_t>(b) * v + c] = third[static_cast<std::size_t>(c) * v + b] = a;
  }
  return make_table(
      v + 1,
      [&](int x, int y) {
        if (x == 0) return y;
        if (y == 0) return x;
        if (x == y) return 0;
        return third[static_cast<std::size_t>(x - 1) * v + (y - 1)] + 1;
      },
      "Steiner" + std::to_string(v + 1));
}

TripleSystem sts_from_steiner(const LoopTable& loop) {
  TripleSystem sts;
  sts.point_count = loop.order() - 1;
  for (int x = 1; x < loop.order(); ++x)
    for (int y = x + 1; y < loop.order(); ++y) {
      const int z = loop(x, y);
      if (z > y) sts.blocks.push_back({x - 1, y - 1, z - 1});
    }
  return sts;
}

TripleSystem ag23_sts() {
  TripleSystem sts;
  sts.point_count = 9;
  auto pt = [](int a, int b) { return 3 * (((a % 3) + 3) % 3) + (((b % 3) + 3) % 3); };
  const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  for (const auto& d : dirs) {
    std::vector<std::array<int, 3>> lines;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        std::array<int, 3> line{pt(a, b), pt(a + d[0], b + d[1]), pt(a + 2 * d[0], b + 2 * d[1])};
        std::sort(line.begin(), line.end());
        if (std::find(lines.begin(), lines.end(), line) == lines.end()) lines.push_back(line);
      }
    for (auto& l : lines) sts.blocks.push_back(l);
  }
  std::sort(sts.blocks.begin(), sts.blocks.end());
  return sts;
}

ExtensionProfile remark_profile() {
  return {{cyclic(2), product(2, 2), cyclic(4), product(2, 4), quaternion8()}, {product(2, 4)}};
}

ExtensionProfile literal_profile() {
  return {{cyclic(2), cyclic(4), product(2, 4), quaternion8()}, {}};
}

namespace {

bool matches_any(const LoopTable& loop, const std::vector<LoopTable>& types) {
  return std::any_of(types.begin(), types.end(), [&](const LoopTable& t) { return is_isomorphic(loop, t); });
}

class ExtensionSearch {
 public:
  ExtensionSearch(const LoopTable& steiner, std::int64_t budget, const ExtensionProfile& profile)
      : s_(steiner), m_(steiner.order()), budget_(budget), profile_(profile) {
    sts_ = sts_from_steiner(s_);
    f_.assign(static_cast<std::size_t>(m_) * m_, 0);
    compute_automorphisms();
    // If every proper subloop of S has order <= 4, every subloop of the extension of order <= 8
    // sits inside the lift of a block.
    block_limited_ = true;
    for (const auto& sub : all_subloops(s_, m_ - 1))
      if (sub.size() > 4) block_limited_ = false;
  }

  ExtensionResult run() {
    try {
      diagonal(1);
    } catch (const BudgetHit&) {
      result_.status = SearchStatus::budget_exceeded;
    }
    result_.nodes = nodes_;
    return result_;
  }

 private:
  struct BudgetHit {};
  struct Found {};

  int& f(int x, int y) { return f_[static_cast<std::size_t>(x) * m_ + y]; }
  int f(int x, int y) const { return f_[static_cast<std::size_t>(x) * m_ + y]; }

  void tick() {
    if (++nodes_ > budget_) throw BudgetHit{};
  }

  LoopTable lift(const std::vector<int>& base) const {
    // base sorted with 0 first; element (base[i], a) has index 2i + a.
    const int k = static_cast<int>(base.size());
    std::vector<int> pos(static_cast<std::size_t>(m_), -1);
    for (int i = 0; i < k; ++i) pos[base[i]] = i;
    return make_table(2 * k, [&](int x, int y) {
      const int u = base[x / 2], v = base[y / 2];
      return 2 * pos[s_(u, v)] + ((x % 2 + y % 2 + f(u, v)) % 2);
    });
  }

  LoopTable full_extension() const {
    return make_table(
        2 * m_, [&](int x, int y) {
          const int u = x % m_, v = y % m_;
          return s_(u, v) + m_ * ((x / m_ + y / m_ + f(u, v)) % 2);
        },
        "Q" + std::to_string(2 * m_));
  }

  bool proper_subloops_allowed(const LoopTable& loop, bool include_self) const {
    for (const auto& sub : all_subloops(loop, loop.order())) {
      if (sub.size() == 1) continue;
      if (sub.size() == loop.order() && !include_self) continue;
      if (!matches_any(restrict_to(loop, sub), profile_.allowed)) return false;
    }
    return true;
  }

  void compute_automorphisms() {
    const int v = sts_.point_count;
    std::vector<int> third(static_cast<std::size_t>(v) * v, -1);
    for (const auto& [a, b, c] : sts_.blocks) {
      third[a * v + b] = third[b * v + a] = c;
      third[a * v + c] = third[c * v + a] = b;
      third[b * v + c] = third[c * v + b] = a;
    }
    std::vector<int> sigma(static_cast<std::size_t>(v), -1);
    std::vector<char> used(static_cast<std::size_t>(v), 0);
    std::function<void(int)> place = [&](int i) {
      if (i == v) {
        automorphisms_.push_back(sigma);
        return;
      }
      for (int t = 0; t < v; ++t) {
        if (used[t]) continue;
        sigma[i] = t;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
          const int k = third[i * v + j];
          if (k < i && sigma[k] != third[t * v + sigma[j]]) ok = false;
        }
        if (!ok) continue;
        used[t] = 1;
        place(i + 1);
        used[t] = 0;
      }
      sigma[i] = -1;
    };
    place(0);
  }

  bool diagonal_is_orbit_minimal() const {
    const int v = sts_.point_count;
    std::vector<int> pattern(static_cast<std::size_t>(v)), image(static_cast<std::size_t>(v));
    for (int x = 0; x < v; ++x) pattern[x] = f(x + 1, x + 1);
    for (const auto& sigma : automorphisms_) {
      for (int x = 0; x < v; ++x) image[sigma[x]] = pattern[x];
      if (image < pattern) return false;
    }
    return true;
  }

  void diagonal(int x) {
    if (x == m_) {
      if (!diagonal_is_orbit_minimal()) {
        ++result_.symmetric_skips;
        return;
      }
      prepare_blocks();
      return;
    }
    for (int bit = 0; bit < 2; ++bit) {
      tick();
      f(x, x) = bit;
      if (!matches_any(lift({0, x}), profile_.allowed)) continue;
      diagonal(x + 1);
      if (result_.loop) return;
    }
    f(x, x) = 0;
  }

  // Valid off-diagonal completions of every block for the current diagonal, then the block DFS.
  void prepare_blocks() {
    completions_.assign(sts_.blocks.size(), {});
    std::vector<char> required_seen(profile_.required.size(), 0);
    for (std::size_t bi = 0; bi < sts_.blocks.size(); ++bi) {
      const auto pairs = block_pairs(bi);
      for (int mask = 0; mask < 64; ++mask) {
        tick();
        for (int e = 0; e < 6; ++e) f(pairs[e].first, pairs[e].second) = (mask >> e) & 1;
        const auto base = block_base(bi);
        const LoopTable block_lift = lift(base);
        if (!proper_subloops_allowed(block_lift, true)) continue;
        completions_[bi].push_back(mask);
        for (std::size_t r = 0; r < profile_.required.size(); ++r)
          if (!required_seen[r] && profile_.required[r].order() <= block_lift.order() &&
              find_subloop_isomorphic(block_lift, profile_.required[r]))
            required_seen[r] = 1;
      }
      if (completions_[bi].empty()) return;
    }
    if (block_limited_)
      for (std::size_t r = 0; r < profile_.required.size(); ++r)
        if (profile_.required[r].order() <= 8 && !required_seen[r]) return;
    blocks(0);
  }

  std::vector<int> block_base(std::size_t bi) const {
    const auto& b = sts_.blocks[bi];
    return {0, b[0] + 1, b[1] + 1, b[2] + 1};
  }

  std::array<std::pair<int, int>, 6> block_pairs(std::size_t bi) const {
    const auto& b = sts_.blocks[bi];
    const int x = b[0] + 1, y = b[1] + 1, z = b[2] + 1;
    return {{{x, y}, {x, z}, {y, x}, {y, z}, {z, x}, {z, y}}};
  }

  void blocks(std::size_t bi) {
    if (bi == sts_.blocks.size()) {
      leaf();
      return;
    }
    const auto pairs = block_pairs(bi);
    for (int mask : completions_[bi]) {
      tick();
      for (int e = 0; e < 6; ++e) f(pairs[e].first, pairs[e].second) = (mask >> e) & 1;
      blocks(bi + 1);
      if (result_.loop) return;
    }
  }

  void leaf() {
    LoopTable q = full_extension();
    if (!structure_probe(q).is_diassociative) return;
    if (!proper_subloops_allowed(q, false)) return;
    for (const auto& r : profile_.required)
      if (!find_subloop_isomorphic(q, r)) return;
    result_.status = SearchStatus::found;
    result_.loop = std::move(q);
  }

  const LoopTable& s_;
  int m_;
  std::int64_t budget_;
  const ExtensionProfile& profile_;
  TripleSystem sts_;
  std::vector<int> f_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<std::vector<int>> completions_;
  bool block_limited_ = false;
  std::int64_t nodes_ = 0;
  ExtensionResult result_;
};

}  // namespace

ExtensionResult central_extension_search(const LoopTable& steiner, std::int64_t budget,
                                         const ExtensionProfile& profile) {
  const auto probe = structure_probe(steiner);
  if (!probe.is_steiner) throw Error(Errc::BadParameter, "central extension search needs a Steiner loop");
  return ExtensionSearch(steiner, budget, profile).run();
}

std::string identify(const LoopTable& loop) {
  const int n = loop.order();
  if (auto inv = abelian_invariants(loop)) {
    if (inv->empty()) return "C1";
    std::string out;
    for (std::size_t i = 0; i < inv->size(); ++i) out += (i ? "xC" : "C") + std::to_string((*inv)[i]);
    return out;
  }
  if (is_associative(loop)) {
    if (n % 2 == 0 && n >= 6 && is_isomorphic(loop, dihedral(n / 2))) return "Dih_" + std::to_string(n / 2);
    if (n == 8 && is_isomorphic(loop, quaternion8())) return "Q8";
    if (n == 12 && is_isomorphic(loop, alt4())) return "Alt4";
    if (n == 24 && is_isomorphic(loop, sym4())) return "Sym4";
    if (n == 60 && is_isomorphic(loop, alt5())) return "Alt5";
    return "group of order " + std::to_string(n);
  }
  if (n == 16 && is_isomorphic(loop, octonion16())) return "O16";
  const auto probe = structure_probe(loop);
  if (probe.is_steiner) return "Steiner loop of order " + std::to_string(n);
  if (probe.is_moufang) return "Moufang loop of order " + std::to_string(n);
  if (probe.is_diassociative) return "diassociative loop of order " + std::to_string(n);
  return "loop of order " + std::to_string(n);
}

}  // namespace loopnet
