#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loopnet/error.hpp"

namespace loopnet {

// Finite loop stored as its Cayley table. Element 0 is always the two-sided unit.
class LoopTable {
 public:
  LoopTable() = default;

  int order() const noexcept { return n_; }
  int operator()(int a, int b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  std::span<const int> row(int a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)};
  }

  // Unique x with a*x = b, resp. y with y*a = b.
  int left_div(int a, int b) const noexcept { return ldiv_[static_cast<std::size_t>(a) * n_ + b]; }
  int right_div(int b, int a) const noexcept { return rdiv_[static_cast<std::size_t>(a) * n_ + b]; }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const LoopTable& a, const LoopTable& b) { return a.n_ == b.n_ && a.table_ == b.table_; }

 private:
  friend LoopTable validate_table(const std::vector<std::vector<int>>& raw, std::string name);

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> ldiv_;
  std::vector<int> rdiv_;
  std::string name_;
};

// Checks the Latin property and the unit convention; throws Error naming the offending index.
LoopTable validate_table(const std::vector<std::vector<int>>& raw, std::string name = {});

// Builds a table from a product function on [0, n) and validates it.
template <typename Product>
LoopTable make_table(int n, Product&& product, std::string name = {}) {
  std::vector<std::vector<int>> raw(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) raw[a][b] = product(a, b);
  return validate_table(raw, std::move(name));
}

/// Least k >= 1 with x^k = 0 for left-normed powers x^{k+1} = x * x^k.
int element_order(const LoopTable& loop, int x);

/// Left-normed power x^k (x^0 = 0).
int power(const LoopTable& loop, int x, int k);

struct StructureReport {
  bool is_group = false;
  bool is_commutative = false;
  bool is_diassociative = false;
  bool is_moufang = false;
  bool is_steiner = false;
  int exponent = 1;
  int max_order = 1;
  std::map<int, int> order_spectrum;
  int involution_count = 0;
  // Set when the loop is not diassociative, so orders depend on the left-normed convention.
  bool orders_left_normed = false;
};

StructureReport structure_probe(const LoopTable& loop);

bool is_associative(const LoopTable& loop);
bool is_commutative(const LoopTable& loop);
bool is_moufang(const LoopTable& loop);
bool is_diassociative(const LoopTable& loop);
std::map<int, int> order_spectrum(const LoopTable& loop);

// Sorted element list containing 0, closed under the product.
struct SubloopSet {
  std::vector<int> elements;

  int size() const noexcept { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
  friend bool operator==(const SubloopSet&, const SubloopSet&) = default;
  friend auto operator<=>(const SubloopSet&, const SubloopSet&) = default;
};

inline constexpr std::int64_t kDefaultSubloopBudget = 1'000'000;

SubloopSet generated_subloop(const LoopTable& loop, std::span<const int> gens);
SubloopSet generated_subloop(const LoopTable& loop, std::initializer_list<int> gens);

// True iff `elements` contains 0 and is closed under the product.
bool is_subloop(const LoopTable& loop, std::span<const int> elements);

/// Every subloop of order <= max_order, each exactly once, sorted by (size, elements).
/// Throws Error(BudgetExceeded) after `budget` closure extensions.
std::vector<SubloopSet> all_subloops(const LoopTable& loop, int max_order,
                                     std::int64_t budget = kDefaultSubloopBudget);

/// Bijection f: A -> B with f(0) = 0 and f(xy) = f(x)f(y), if one exists.
std::optional<std::vector<int>> find_isomorphism(const LoopTable& a, const LoopTable& b);

bool is_isomorphic(const LoopTable& a, const LoopTable& b);

// Searches closures of up to three generators, then falls back to all_subloops.
std::optional<SubloopSet> find_subloop_isomorphic(const LoopTable& loop, const LoopTable& target,
                                                  std::int64_t budget = kDefaultSubloopBudget);

// The subloop as a loop in its own right; elements renumbered in sorted order.
LoopTable restrict_to(const LoopTable& loop, const SubloopSet& sub);

// Relabels x -> perm[x]; perm must fix 0.
LoopTable transport(const LoopTable& loop, std::span<const int> perm);

// Pairs (a, b) indexed a * |B| + b.
LoopTable direct_product(const LoopTable& a, const LoopTable& b);

// Invariant factors d1 | d2 | ... of an abelian group (empty for the trivial group);
// nullopt when the loop is not an abelian group.
std::optional<std::vector<int>> abelian_invariants(const LoopTable& loop);

// Greedy generating sequence: repeatedly adds an element of maximal order outside the current closure.
std::vector<int> greedy_generators(const LoopTable& loop);

}  // namespace loopnet
