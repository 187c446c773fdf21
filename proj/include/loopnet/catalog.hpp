#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loopnet/loop.hpp"

namespace loopnet {

enum class GroupKind { cyclic, product, dihedral, quaternion8, alt4, sym4, alt5 };

struct GroupSpec {
  GroupKind kind = GroupKind::cyclic;
  int a = 1;  // cyclic order, first product factor, or dihedral degree
  int b = 1;  // second product factor
};

LoopTable make_group(const GroupSpec& spec);

LoopTable cyclic(int n);
LoopTable product(int a, int b);
// Order 2d: indices 0..d-1 are g^k, d..2d-1 are g^k h, with h g h = g^{-1}.
LoopTable dihedral(int d);
// 0 = 1, 1 = -1, 2 = i, 3 = -i, 4 = j, 5 = -j, 6 = k, 7 = -k.
LoopTable quaternion8();
LoopTable alt4();
LoopTable sym4();
LoopTable alt5();
LoopTable elementary_abelian(int p, int rank);

// Signed octonion units; index 2k + s stands for (-1)^s e_k, with e_0 = 1.
LoopTable octonion16();

// Oriented Fano triples (a, b, c) meaning e_a e_b = e_c.
inline constexpr std::array<std::array<int, 3>, 7> kFanoTriples{{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};

/// Chein double M(G, 2) on pairs (g, e), indexed g + e|G|:
///   (g,0)(h,0) = (gh,0), (g,0)(h,1) = (hg,1), (g,1)(h,0) = (gh^-1,1), (g,1)(h,1) = (h^-1 g,0).
/// With must_be_group set, a non-associative G is rejected with NotAGroup.
LoopTable chein_double(const LoopTable& group, bool must_be_group = true);

struct TripleSystem {
  int point_count = 0;
  std::vector<std::array<int, 3>> blocks;
};

// Throws NotAnSTS when some pair of points lies in no block or in several.
void validate_sts(const TripleSystem& sts);

// Loop of order v + 1: point i becomes element i + 1, x*x = 0, x*y = third point of the block.
LoopTable steiner_from_sts(const TripleSystem& sts);

// Blocks {x, y, xy} of a Steiner loop, as a triple system on points 0..n-2.
TripleSystem sts_from_steiner(const LoopTable& loop);

// Affine plane of order 3: point (a, b) is index 3a + b; blocks are its 12 lines.
TripleSystem ag23_sts();

struct ExtensionProfile {
  std::vector<LoopTable> allowed;   // every proper nontrivial subloop must match one of these
  std::vector<LoopTable> required;  // each of these must occur as a subloop
};

// Allowed {C2, C2xC2, C4, C2xC4, Q8}, required {C2xC4}.
ExtensionProfile remark_profile();
// Allowed {C2, C4, C2xC4, Q8}, nothing required.
ExtensionProfile literal_profile();

enum class SearchStatus { found, exhausted, budget_exceeded };

struct ExtensionResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<LoopTable> loop;
  std::int64_t nodes = 0;
  // Diagonal patterns skipped as non-minimal under the automorphism group of the triple system.
  std::int64_t symmetric_skips = 0;
};

/// Central extension of a Steiner loop S by C2: pairs (x, a) with
/// (x,a)(y,b) = (xy, a + b + f(x,y) mod 2), f normalized. Depth-first over f, diagonal first,
/// then block by block; only diagonal patterns minimal under Aut(STS) are explored.
ExtensionResult central_extension_search(const LoopTable& steiner, std::int64_t budget,
                                         const ExtensionProfile& profile = remark_profile());

// Human-readable identification of a few named families ("C6", "C2xC6", "Dih_3", "Q8", "O16", ...).
std::string identify(const LoopTable& loop);

}  // namespace loopnet
