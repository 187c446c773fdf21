#include "loopnet/loop.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace loopnet {

std::vector<std::vector<int>> LoopTable::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a) out[a].assign(row(a).begin(), row(a).end());
  return out;
}

LoopTable validate_table(const std::vector<std::vector<int>>& raw, std::string name) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) throw Error(Errc::BadParameter, "empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(raw[a].size()) != n)
      throw Error(Errc::BadParameter, "row " + std::to_string(a) + " has wrong length", a);
    for (int v : raw[a])
      if (v < 0 || v >= n) throw Error(Errc::EntryOutOfRange, "row " + std::to_string(a) + " entry out of range", a);
  }

  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      if (seen[raw[a][b]]) throw Error(Errc::RowNotPermutation, "row " + std::to_string(a), a);
      seen[raw[a][b]] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      if (seen[raw[a][b]]) throw Error(Errc::ColNotPermutation, "column " + std::to_string(b), b);
      seen[raw[a][b]] = 1;
    }
  }
  for (int x = 0; x < n; ++x) {
    if (raw[0][x] != x || raw[x][0] != x)
      throw Error(Errc::NoUnit, "element 0 is not a two-sided unit at " + std::to_string(x), x);
  }

  LoopTable loop;
  loop.n_ = n;
  loop.name_ = std::move(name);
  loop.table_.resize(static_cast<std::size_t>(n) * n);
  loop.ldiv_.resize(loop.table_.size());
  loop.rdiv_.resize(loop.table_.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) loop.table_[static_cast<std::size_t>(a) * n + b] = raw[a][b];
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      loop.ldiv_[static_cast<std::size_t>(a) * n + raw[a][x]] = x;
      loop.rdiv_[static_cast<std::size_t>(a) * n + raw[x][a]] = x;
    }
  }
  return loop;
}

int power(const LoopTable& loop, int x, int k) {
  int acc = 0;
  for (int i = 0; i < k; ++i) acc = loop(x, acc);
  return acc;
}

int element_order(const LoopTable& loop, int x) {
  // Left multiplication by x is a permutation, so the orbit of 0 returns to 0.
  int acc = x;
  int k = 1;
  while (acc != 0) {
    acc = loop(x, acc);
    ++k;
  }
  return k;
}

bool is_associative(const LoopTable& loop) {
  const int n = loop.order();
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      const int ab = loop(a, b);
      for (int c = 1; c < n; ++c)
        if (loop(ab, c) != loop(a, loop(b, c))) return false;
    }
  return true;
}

bool is_commutative(const LoopTable& loop) {
  const int n = loop.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (loop(a, b) != loop(b, a)) return false;
  return true;
}

bool is_moufang(const LoopTable& loop) {
  const int n = loop.order();
  for (int z = 1; z < n; ++z)
    for (int x = 1; x < n; ++x) {
      const int zxz = loop(loop(z, x), z);
      for (int y = 1; y < n; ++y)
        if (loop(z, loop(x, loop(z, y))) != loop(zxz, y)) return false;
    }
  return true;
}

namespace {

// Closure of seed U {0}; nullopt as soon as it exceeds `limit` elements.
std::optional<std::vector<int>> closure(const LoopTable& loop, std::span<const int> seed, int limit) {
  const int n = loop.order();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  auto add = [&](int c) {
    if (!in[c]) {
      in[c] = 1;
      elems.push_back(c);
    }
  };
  for (int g : seed) add(g);
  if (static_cast<int>(elems.size()) > limit) return std::nullopt;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(loop(elems[i], elems[j]));
      add(loop(elems[j], elems[i]));
      if (static_cast<int>(elems.size()) > limit) return std::nullopt;
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool associative_on(const LoopTable& loop, const std::vector<int>& elems) {
  for (int a : elems)
    for (int b : elems) {
      const int ab = loop(a, b);
      for (int c : elems)
        if (loop(ab, c) != loop(a, loop(b, c))) return false;
    }
  return true;
}

}  // namespace

bool is_diassociative(const LoopTable& loop) {
  const int n = loop.order();
  // Closures already shown associative; distinct pairs often generate the same subloop.
  std::set<std::vector<int>> verified;
  for (int x = 1; x < n; ++x)
    for (int y = x; y < n; ++y) {
      const int pair[2] = {x, y};
      auto sub = closure(loop, pair, n);
      if (verified.contains(*sub)) continue;
      if (!associative_on(loop, *sub)) return false;
      verified.insert(std::move(*sub));
    }
  return true;
}

std::map<int, int> order_spectrum(const LoopTable& loop) {
  std::map<int, int> spectrum;
  for (int x = 0; x < loop.order(); ++x) ++spectrum[element_order(loop, x)];
  return spectrum;
}

StructureReport structure_probe(const LoopTable& loop) {
  StructureReport report;
  report.is_group = is_associative(loop);
  report.is_commutative = is_commutative(loop);
  if (report.is_group) {
    report.is_moufang = true;
    report.is_diassociative = true;
  } else {
    report.is_moufang = is_moufang(loop);
    // Moufang's theorem: Moufang loops are diassociative.
    report.is_diassociative = report.is_moufang || is_diassociative(loop);
  }
  report.order_spectrum = order_spectrum(loop);
  report.exponent = 1;
  for (const auto& [ord, count] : report.order_spectrum) report.exponent = std::lcm(report.exponent, ord);
  report.max_order = report.order_spectrum.rbegin()->first;
  auto inv = report.order_spectrum.find(2);
  report.involution_count = inv == report.order_spectrum.end() ? 0 : inv->second;
  report.is_steiner = report.is_diassociative && report.exponent == 2;
  report.orders_left_normed = !report.is_diassociative;
  return report;
}

bool SubloopSet::contains(int x) const { return std::binary_search(elements.begin(), elements.end(), x); }

SubloopSet generated_subloop(const LoopTable& loop, std::span<const int> gens) {
  return SubloopSet{*closure(loop, gens, loop.order())};
}

SubloopSet generated_subloop(const LoopTable& loop, std::initializer_list<int> gens) {
  return generated_subloop(loop, std::span<const int>(gens.begin(), gens.size()));
}

bool is_subloop(const LoopTable& loop, std::span<const int> elements) {
  std::vector<char> in(static_cast<std::size_t>(loop.order()), 0);
  for (int x : elements) {
    if (x < 0 || x >= loop.order()) return false;
    in[x] = 1;
  }
  if (!in[0]) return false;
  for (int a : elements)
    for (int b : elements)
      if (!in[loop(a, b)]) return false;
  return true;
}

std::vector<SubloopSet> all_subloops(const LoopTable& loop, int max_order, std::int64_t budget) {
  const int n = loop.order();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{{0}};
  seen.insert({0});
  std::int64_t nodes = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int> current = queue[head];
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int x : current) in[x] = 1;
    std::vector<int> seed = current;
    seed.push_back(0);
    for (int g = 1; g < n; ++g) {
      if (in[g]) continue;
      if (++nodes > budget) throw Error(Errc::BudgetExceeded, "subloop enumeration exceeded node budget");
      seed.back() = g;
      auto ext = closure(loop, seed, max_order);
      if (!ext) continue;
      if (seen.insert(*ext).second) queue.push_back(std::move(*ext));
    }
  }
  std::vector<SubloopSet> out;
  out.reserve(queue.size());
  for (auto& s : queue)
    if (static_cast<int>(s.size()) <= max_order) out.push_back(SubloopSet{std::move(s)});
  std::sort(out.begin(), out.end(), [](const SubloopSet& a, const SubloopSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.elements < b.elements;
  });
  return out;
}

std::vector<int> greedy_generators(const LoopTable& loop) {
  const int n = loop.order();
  std::vector<int> orders(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) orders[x] = element_order(loop, x);
  std::vector<int> gens;
  std::vector<int> current{0};
  while (static_cast<int>(current.size()) < n) {
    int best = -1;
    for (int x = 1; x < n; ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      if (best < 0 || orders[x] > orders[best]) best = x;
    }
    gens.push_back(best);
    current = *closure(loop, gens, n);
  }
  return gens;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const LoopTable& a, const LoopTable& b) : a_(a), b_(b), n_(a.order()) {
    gens_ = greedy_generators(a_);
    images_.assign(gens_.size(), 0);
    orders_a_.resize(static_cast<std::size_t>(n_));
    orders_b_.resize(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) {
      orders_a_[x] = element_order(a_, x);
      orders_b_[x] = element_order(b_, x);
    }
  }

  std::optional<std::vector<int>> run() {
    if (gens_.empty()) return std::vector<int>{0};
    return descend(0);
  }

 private:
  // Map forced by the first k generator images, or nullopt on a conflict.
  std::optional<std::vector<int>> propagate(std::size_t k) const {
    std::vector<int> f(static_cast<std::size_t>(n_), -1);
    std::vector<char> used(static_cast<std::size_t>(n_), 0);
    std::vector<int> known{0};
    f[0] = 0;
    used[0] = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const int g = gens_[i];
      const int im = images_[i];
      if (f[g] >= 0) {
        if (f[g] != im) return std::nullopt;
        continue;
      }
      if (used[im]) return std::nullopt;
      f[g] = im;
      used[im] = 1;
      known.push_back(g);
    }
    auto extend = [&](int x, int y) {
      const int c = a_(x, y);
      const int fc = b_(f[x], f[y]);
      if (f[c] < 0) {
        if (used[fc]) return false;
        f[c] = fc;
        used[fc] = 1;
        known.push_back(c);
        return true;
      }
      return f[c] == fc;
    };
    for (std::size_t i = 0; i < known.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (!extend(known[i], known[j]) || !extend(known[j], known[i])) return std::nullopt;
    return f;
  }

  std::optional<std::vector<int>> descend(std::size_t depth) {
    const int want = orders_a_[gens_[depth]];
    for (int im = 1; im < n_; ++im) {
      if (orders_b_[im] != want) continue;
      images_[depth] = im;
      auto f = propagate(depth + 1);
      if (!f) continue;
      if (depth + 1 == gens_.size()) {
        if (std::find(f->begin(), f->end(), -1) == f->end()) return f;
        continue;
      }
      if (auto r = descend(depth + 1)) return r;
    }
    return std::nullopt;
  }

  const LoopTable& a_;
  const LoopTable& b_;
  int n_;
  std::vector<int> gens_;
  std::vector<int> images_;
  std::vector<int> orders_a_;
  std::vector<int> orders_b_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const LoopTable& a, const LoopTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (order_spectrum(a) != order_spectrum(b)) return std::nullopt;
  return IsoSearch(a, b).run();
}

bool is_isomorphic(const LoopTable& a, const LoopTable& b) { return find_isomorphism(a, b).has_value(); }

LoopTable restrict_to(const LoopTable& loop, const SubloopSet& sub) {
  const int m = sub.size();
  std::vector<int> index(static_cast<std::size_t>(loop.order()), -1);
  for (int i = 0; i < m; ++i) index[sub.elements[i]] = i;
  std::vector<std::vector<int>> raw(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int c = index[loop(sub.elements[i], sub.elements[j])];
      if (c < 0) throw Error(Errc::NotASubloop, "element set is not closed under the product");
      raw[i][j] = c;
    }
  return validate_table(raw, loop.name().empty() ? std::string{} : loop.name() + "|sub");
}

std::optional<SubloopSet> find_subloop_isomorphic(const LoopTable& loop, const LoopTable& target,
                                                  std::int64_t budget) {
  const int n = loop.order();
  const int m = target.order();
  if (m > n) return std::nullopt;
  const auto target_spectrum = order_spectrum(target);
  const auto gens = greedy_generators(target);
  if (gens.empty()) return SubloopSet{{0}};

  auto matches = [&](const std::vector<int>& elems) {
    const SubloopSet sub{elems};
    const LoopTable candidate = restrict_to(loop, sub);
    return order_spectrum(candidate) == target_spectrum && is_isomorphic(candidate, target);
  };

  if (gens.size() <= 3) {
    std::vector<int> pool;
    for (int x = 1; x < n; ++x)
      if (target_spectrum.contains(element_order(loop, x))) pool.push_back(x);
    const std::size_t k = gens.size();
    if (pool.size() < k) return std::nullopt;
    std::set<std::vector<int>> seen;
    std::int64_t nodes = 0;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> seed(k);
    while (true) {
      if (++nodes > budget) throw Error(Errc::BudgetExceeded, "subloop search exceeded node budget");
      for (std::size_t i = 0; i < k; ++i) seed[i] = pool[idx[i]];
      auto sub = closure(loop, seed, m);
      if (sub && static_cast<int>(sub->size()) == m && seen.insert(*sub).second && matches(*sub))
        return SubloopSet{std::move(*sub)};
      // Next k-combination of pool indices.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::nullopt;
  }

  for (const auto& sub : all_subloops(loop, m, budget))
    if (sub.size() == m && matches(sub.elements)) return sub;
  return std::nullopt;
}

LoopTable transport(const LoopTable& loop, std::span<const int> perm) {
  const int n = loop.order();
  if (static_cast<int>(perm.size()) != n || perm[0] != 0)
    throw Error(Errc::BadParameter, "transport needs a bijection of [0, n) fixing 0");
  std::vector<std::vector<int>> raw(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) raw[perm[a]][perm[b]] = perm[loop(a, b)];
  return validate_table(raw, loop.name());
}

LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
  const int m = b.order();
  std::string name = a.name().empty() || b.name().empty() ? std::string{} : a.name() + "x" + b.name();
  return make_table(
      a.order() * m,
      [&](int x, int y) { return a(x / m, y / m) * m + b(x % m, y % m); }, std::move(name));
}

std::optional<std::vector<int>> abelian_invariants(const LoopTable& loop) {
  if (!is_commutative(loop) || !is_associative(loop)) return std::nullopt;
  const int n = loop.order();
  std::vector<int> orders(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) orders[x] = element_order(loop, x);

  // For each prime p: parts[p] = exponents of the cyclic p-primary factors, descending.
  std::vector<std::pair<int, std::vector<int>>> primary;
  int rest = n;
  for (int p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    // at_least[k] = number of cyclic factors with exponent >= k.
    std::vector<int> at_least(static_cast<std::size_t>(e + 1), 0);
    long long prev = 1;
    long long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      long long count = 0;
      for (int o : orders)
        if (pk % o == 0) ++count;
      long long ratio = count / prev;
      int r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      at_least[k] = r;
      prev = count;
    }
    std::vector<int> exps;
    for (int t = 1; t <= at_least[1]; ++t) {
      int ex = 0;
      for (int k = 1; k <= e; ++k)
        if (at_least[k] >= t) ++ex;
      exps.push_back(ex);
    }
    primary.emplace_back(p, std::move(exps));
  }
  std::size_t factors = 0;
  for (const auto& [p, exps] : primary) factors = std::max(factors, exps.size());
  std::vector<int> out(factors, 1);
  // out[0] is the largest factor before reversal.
  for (const auto& [p, exps] : primary)
    for (std::size_t t = 0; t < exps.size(); ++t)
      for (int k = 0; k < exps[t]; ++k) out[t] *= p;
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace loopnet
