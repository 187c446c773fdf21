#include "loopnet/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "loopnet/engine.hpp"

namespace loopnet {

std::string_view status_name(PointStatus s) {
  switch (s) {
    case PointStatus::frame: return "frame";
    case PointStatus::forced: return "forced";
    case PointStatus::one_parameter: return "one-parameter";
    case PointStatus::free: return "free";
  }
  return "?";
}

int SearchPlan::count(PointStatus s) const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [s](const PlanStep& st) { return st.status == s; }));
}

double SearchPlan::branch_estimate(std::uint32_t p) const {
  const double q = p;
  return std::pow(q + 1, count(PointStatus::one_parameter)) * std::pow(q * q + q + 1, count(PointStatus::free));
}

namespace {

// The point of the triple completing (c1, x1), (c2, x2); c1 != c2.
std::pair<int, int> third_of(const LoopTable& loop, int c1, int x1, int c2, int x2) {
  if (c1 > c2) {
    std::swap(c1, c2);
    std::swap(x1, x2);
  }
  if (c1 == 0 && c2 == 1) return {2, loop(x1, x2)};
  if (c1 == 0) return {1, loop.left_div(x1, x2)};
  return {0, loop.right_div(x2, x1)};
}

// Pairs of other-component points that, once placed, put a line through (c, x).
template <typename Fn>
void for_each_constraint(const LoopTable& loop, int c, int x, Fn&& fn) {
  const int n = loop.order();
  for (int w = 0; w < n; ++w) {
    switch (c) {
      case 0: fn(1, w, 2, loop(x, w)); break;
      case 1: fn(0, w, 2, loop(w, x)); break;
      default: fn(0, w, 1, loop.left_div(w, x)); break;
    }
  }
}

SearchPlan plan_for(const LoopTable& loop, int g, int h) {
  const int n = loop.order();
  SearchPlan out;
  out.g = g;
  out.h = h;
  std::array<std::vector<char>, 3> placed;
  for (auto& v : placed) v.assign(static_cast<std::size_t>(n), 0);
  auto add = [&](int c, int x, PointStatus s) {
    out.steps.push_back({c, x, s});
    placed[c][x] = 1;
  };
  add(0, 0, PointStatus::frame);
  add(1, 0, PointStatus::frame);
  if (n > 1) {
    add(0, g, PointStatus::frame);
    add(1, h, PointStatus::frame);
  }
  while (static_cast<int>(out.steps.size()) < 3 * n) {
    int best_c = -1, best_x = -1, best = -1;
    for (int c = 0; c < 3; ++c)
      for (int x = 0; x < n; ++x) {
        if (placed[c][x]) continue;
        int lines = 0;
        for_each_constraint(loop, c, x, [&](int ca, int xa, int cb, int xb) { lines += placed[ca][xa] && placed[cb][xb]; });
        if (lines > best) {
          best = lines;
          best_c = c;
          best_x = x;
        }
      }
    add(best_c, best_x,
        best >= 2 ? PointStatus::forced : (best == 1 ? PointStatus::one_parameter : PointStatus::free));
  }
  return out;
}

// PG(2, p) with points and lines indexed by canonical integer triples in ascending order.
class Plane {
 public:
  explicit Plane(std::uint32_t p) : p_(static_cast<int>(p)), inv_(p, 0), index_(static_cast<std::size_t>(p) * p * p, -1) {
    for (int a = 1; a < p_; ++a) inv_[a] = static_cast<int>(Fp(a, p).inverse().value());
    auto push = [&](int x, int y, int z) {
      index_[code(x, y, z)] = static_cast<int>(pts_.size());
      pts_.push_back({x, y, z});
    };
    push(0, 0, 1);
    for (int z = 0; z < p_; ++z) push(0, 1, z);
    for (int y = 0; y < p_; ++y)
      for (int z = 0; z < p_; ++z) push(1, y, z);
    on_line_.resize(pts_.size());
  }

  int size() const { return static_cast<int>(pts_.size()); }
  const std::array<int, 3>& coords(int i) const { return pts_[static_cast<std::size_t>(i)]; }

  int canon(std::int64_t x, std::int64_t y, std::int64_t z) const {
    std::array<std::int64_t, 3> v{mod(x), mod(y), mod(z)};
    int lead = 0;
    while (lead < 3 && v[lead] == 0) ++lead;
    if (lead == 3) return -1;
    const std::int64_t s = inv_[v[lead]];
    for (auto& c : v) c = c * s % p_;
    return index_[code(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]))];
  }

  // Line through two points, or the meet of two lines (same formula by duality).
  int cross(int a, int b) const {
    const auto& u = coords(a);
    const auto& v = coords(b);
    return canon(static_cast<std::int64_t>(u[1]) * v[2] - static_cast<std::int64_t>(u[2]) * v[1],
                 static_cast<std::int64_t>(u[2]) * v[0] - static_cast<std::int64_t>(u[0]) * v[2],
                 static_cast<std::int64_t>(u[0]) * v[1] - static_cast<std::int64_t>(u[1]) * v[0]);
  }

  bool on(int pt, int line) const {
    const auto& u = coords(pt);
    const auto& l = coords(line);
    return (static_cast<std::int64_t>(u[0]) * l[0] + static_cast<std::int64_t>(u[1]) * l[1] +
            static_cast<std::int64_t>(u[2]) * l[2]) % p_ == 0;
  }

  // Not thread-safe; call prepare_lines() before sharing.
  const std::vector<int>& points_on(int line) const { return on_line_[static_cast<std::size_t>(line)]; }

  void prepare_lines() {
    for (int l = 0; l < size(); ++l)
      for (int q = 0; q < size(); ++q)
        if (on(q, l)) on_line_[l].push_back(q);
  }

  ProjPoint<Fp> point(int i) const {
    const auto& c = coords(i);
    const auto p = static_cast<std::uint32_t>(p_);
    return ProjPoint<Fp>(Fp(c[0], p), Fp(c[1], p), Fp(c[2], p));
  }

 private:
  std::int64_t mod(std::int64_t v) const { return ((v % p_) + p_) % p_; }
  std::size_t code(int x, int y, int z) const { return (static_cast<std::size_t>(x) * p_ + y) * p_ + z; }

  int p_;
  std::vector<std::int64_t> inv_;
  std::vector<std::array<int, 3>> pts_;
  std::vector<int> index_;
  std::vector<std::vector<int>> on_line_;
};

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};
  std::uint64_t budget = 0;
};

class Worker {
 public:
  Worker(const LoopTable& loop, const Plane& plane, const SearchPlan& plan, Shared& shared, const SearchOptions& opt,
         int shard_depth, int id)
      : loop_(loop), plane_(plane), plan_(plan), shared_(shared), opt_(opt), shard_depth_(shard_depth), id_(id),
        n_(loop.order()), pos_(static_cast<std::size_t>(3 * n_), -1), owner_(static_cast<std::size_t>(plane.size()), -1),
        cursor_(plan.steps.size(), 0) {}

  void run() { dfs(0, opt_.resume.has_value()); }

  // (candidate index at the shard step, assignment) in discovery order
  std::vector<std::pair<int, std::vector<int>>> found;
  std::vector<int> checkpoint;

 private:
  int& at(int c, int x) { return pos_[static_cast<std::size_t>(c * n_ + x)]; }

  std::vector<int> candidates(const PlanStep& st) {
    if (st.status == PointStatus::frame) {
      if (st.comp == 0 && st.label == 0) return {plane_.canon(1, 0, 0)};
      if (st.comp == 1 && st.label == 0) return {plane_.canon(0, 1, 0)};
      if (st.comp == 0) return {plane_.canon(0, 0, 1)};
      return {plane_.canon(1, 1, 1)};
    }
    std::vector<int> lines;
    for_each_constraint(loop_, st.comp, st.label, [&](int ca, int xa, int cb, int xb) {
      if (at(ca, xa) >= 0 && at(cb, xb) >= 0) lines.push_back(plane_.cross(at(ca, xa), at(cb, xb)));
    });
    if (st.status == PointStatus::forced) {
      if (lines[0] == lines[1]) return {};
      return {plane_.cross(lines[0], lines[1])};
    }
    if (st.status == PointStatus::one_parameter) return plane_.points_on(lines[0]);
    std::vector<int> all(static_cast<std::size_t>(plane_.size()));
    for (int i = 0; i < plane_.size(); ++i) all[i] = i;
    return all;
  }

  // Every line through the new point and a placed point of another component may carry,
  // besides those two, only the designated third point of their triple, and must carry it if placed.
  bool consistent(int c, int x) {
    const int pt = at(c, x);
    for (int c2 = 0; c2 < 3; ++c2) {
      if (c2 == c) continue;
      for (int x2 = 0; x2 < n_; ++x2) {
        const int q = at(c2, x2);
        if (q < 0) continue;
        const int line = plane_.cross(pt, q);
        const auto [c3, x3] = third_of(loop_, c, x, c2, x2);
        const int r = at(c3, x3);
        if (r >= 0 && !plane_.on(r, line)) return false;
        for (int id = 0; id < 3 * n_; ++id) {
          const int s = pos_[static_cast<std::size_t>(id)];
          if (s < 0 || s == pt || s == q || s == r) continue;
          if (plane_.on(s, line)) return false;
        }
      }
    }
    return true;
  }

  void dfs(std::size_t depth, bool on_resume_path) {
    if (shared_.budget_hit.load(std::memory_order_relaxed) || done_) return;
    if (depth == plan_.steps.size()) {
      found.emplace_back(shard_choice_, pos_);
      if (!opt_.exhaustive) done_ = true;
      return;
    }
    const auto& st = plan_.steps[depth];
    const auto cand = candidates(st);
    const int start = on_resume_path ? (*opt_.resume)[depth] : 0;
    for (int k = start; k < static_cast<int>(cand.size()); ++k) {
      if (static_cast<int>(depth) == shard_depth_ && k % opt_.workers != id_) continue;
      if (static_cast<int>(depth) >= shard_depth_ || id_ == 0) {
        if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.budget) {
          if (!shared_.budget_hit.exchange(true)) {
            checkpoint.assign(cursor_.begin(), cursor_.begin() + static_cast<std::ptrdiff_t>(depth));
            checkpoint.push_back(k);
            checkpoint.resize(plan_.steps.size(), 0);
          }
          return;
        }
      }
      const int pt = cand[k];
      if (owner_[pt] >= 0) continue;
      cursor_[depth] = k;
      if (static_cast<int>(depth) == shard_depth_) shard_choice_ = k;
      at(st.comp, st.label) = pt;
      owner_[pt] = st.comp * n_ + st.label;
      if (consistent(st.comp, st.label)) dfs(depth + 1, on_resume_path && k == start);
      owner_[pt] = -1;
      at(st.comp, st.label) = -1;
      if (shared_.budget_hit.load(std::memory_order_relaxed) || done_) return;
    }
  }

  const LoopTable& loop_;
  const Plane& plane_;
  const SearchPlan& plan_;
  Shared& shared_;
  const SearchOptions& opt_;
  int shard_depth_, id_, n_;
  std::vector<int> pos_, owner_, cursor_;
  int shard_choice_ = 0;
  bool done_ = false;
};

using NetKey = std::array<std::vector<ProjPoint<Fp>>, 3>;

NetKey key_of(const DualNet<Fp>& net) {
  NetKey key = net.comps;
  for (auto& c : key) std::sort(c.begin(), c.end());
  return key;
}

bool key_less(const NetKey& a, const NetKey& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
}

}  // namespace

SearchPlan plan(const LoopTable& loop) {
  const int n = loop.order();
  if (n < 1) throw Error(Errc::BadParameter, "empty loop");
  if (n == 1) return plan_for(loop, 0, 0);
  std::optional<SearchPlan> best;
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h) {
      auto cand = plan_for(loop, g, h);
      if (!best || std::pair{cand.count(PointStatus::free), cand.count(PointStatus::one_parameter)} <
                       std::pair{best->count(PointStatus::free), best->count(PointStatus::one_parameter)})
        best = std::move(cand);
    }
  return *best;
}

SearchResult search(const LoopTable& loop, std::uint32_t p, const SearchOptions& options) {
  if (!is_prime(p)) throw Error(Errc::BadParameter, "modulus is not prime");
  if (options.workers < 1) throw Error(Errc::BadParameter, "need at least one worker");
  if (options.resume && options.workers != 1) throw Error(Errc::BadParameter, "resume needs a single worker");
  SearchResult result;
  result.plan = plan(loop);
  result.hypothesis_met = static_cast<int>(p) > loop.order();
  if (options.resume && options.resume->size() != result.plan.steps.size())
    throw Error(Errc::BadParameter, "checkpoint does not match the search plan");

  Plane plane(p);
  plane.prepare_lines();
  Shared shared;
  shared.budget = options.budget;
  int shard_depth = static_cast<int>(result.plan.steps.size());
  for (std::size_t i = 0; i < result.plan.steps.size(); ++i)
    if (result.plan.steps[i].status == PointStatus::one_parameter || result.plan.steps[i].status == PointStatus::free) {
      shard_depth = static_cast<int>(i);
      break;
    }

  std::vector<Worker> workers;
  workers.reserve(static_cast<std::size_t>(options.workers));
  for (int w = 0; w < options.workers; ++w) workers.emplace_back(loop, plane, result.plan, shared, options, shard_depth, w);
  if (options.workers == 1) {
    workers[0].run();
  } else {
    std::vector<std::jthread> threads;
    for (auto& w : workers) threads.emplace_back([&w] { w.run(); });
  }

  std::vector<std::pair<int, std::vector<int>>> merged;
  for (auto& w : workers) {
    merged.insert(merged.end(), w.found.begin(), w.found.end());
    if (!w.checkpoint.empty()) result.checkpoint = w.checkpoint;
  }
  // Shard index first; within a shard, one worker's discovery order is the sequential order.
  std::stable_sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (!options.exhaustive && merged.size() > 1) merged.resize(1);

  const int n = loop.order();
  for (const auto& [shard, assignment] : merged) {
    DualNet<Fp> net{Field{p}, n, {}};
    for (int c = 0; c < 3; ++c)
      for (int x = 0; x < n; ++x) net.comps[c].push_back(plane.point(assignment[static_cast<std::size_t>(c * n + x)]));
    if (!verify(net, true, &loop).pass) continue;
    if (!is_isomorphic(recover_loop(net, 0, 0), loop)) continue;
    result.nets.push_back(std::move(net));
  }
  result.nets = dedup(std::move(result.nets));
  result.nodes = shared.nodes.load();
  result.complete = !shared.budget_hit.load();
  if (result.complete) result.checkpoint.clear();
  return result;
}

std::vector<DualNet<Fp>> dedup(std::vector<DualNet<Fp>> nets) {
  std::vector<std::pair<NetKey, std::size_t>> keyed;
  for (std::size_t i = 0; i < nets.size(); ++i) keyed.emplace_back(key_of(nets[i]), i);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return key_less(a.first, b.first); });
  std::vector<DualNet<Fp>> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i && keyed[i].first == keyed[i - 1].first) continue;
    out.push_back(std::move(nets[keyed[i].second]));
  }
  return out;
}

}  // namespace loopnet
