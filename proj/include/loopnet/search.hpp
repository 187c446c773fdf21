#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "loopnet/dual_net.hpp"
#include "loopnet/loop.hpp"

namespace loopnet {

enum class PointStatus { frame, forced, one_parameter, free };

std::string_view status_name(PointStatus s);

struct PlanStep {
  int comp = 0;  // 0 alpha, 1 beta, 2 gamma
  int label = 0;
  PointStatus status = PointStatus::free;
};

/// Placement order of all 3n points. The frame is alpha(0) = (1:0:0), beta(0) = (0:1:0),
/// alpha(g) = (0:0:1), beta(h) = (1:1:1); no three of these are collinear in any realization
/// (such a line would carry two points of one component and one of another).
struct SearchPlan {
  int g = 0, h = 0;
  std::vector<PlanStep> steps;

  int count(PointStatus s) const;
  // (p+1)^(one-parameter steps) * (p^2+p+1)^(free steps)
  double branch_estimate(std::uint32_t p) const;
};

/// Greedy order: always place next the point lying on the most already-determined lines.
/// The frame pair (g, h) minimizes (free steps, one-parameter steps), ties by least (g, h).
SearchPlan plan(const LoopTable& loop);

struct SearchOptions {
  std::uint64_t budget = 100'000'000;  // node limit, shared by all workers
  bool exhaustive = true;              // false: stop after the first net
  int workers = 1;
  std::optional<std::vector<int>> resume;  // position vector from an earlier budget stop (one worker)
};

struct SearchResult {
  std::vector<DualNet<Fp>> nets;  // verified, deduplicated, canonical order
  bool complete = false;          // false when the budget tripped
  std::uint64_t nodes = 0;
  SearchPlan plan;
  bool hypothesis_met = false;       // p > n
  std::vector<int> checkpoint;       // candidate index per plan step at the budget stop (one worker)
};

/// Depth-first search for realizations of `loop` over GF(p) in the fixed frame. Every emitted
/// net passes verify against `loop`. A complete exhaustive run with no nets certifies that none
/// exists up to projectivity.
SearchResult search(const LoopTable& loop, std::uint32_t p, const SearchOptions& options = {});

/// Sorted, duplicate-free list under the key "sorted canonical point list per component".
std::vector<DualNet<Fp>> dedup(std::vector<DualNet<Fp>> nets);

}  // namespace loopnet
