#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loopnet/loop.hpp"

namespace loopnet {

enum class Verdict { excluded, admitted, inconclusive };
enum class Rule { group_list, max_order, unique_involution, equal_orders, moufang, none };

std::string_view verdict_name(Verdict v);
std::string_view rule_name(Rule r);

// What an exclusion certificate witnesses; each kind has a replay in replay_certificate.
enum class Witness {
  none,
  rank_three_subgroup,       // elements: three independent elements of one prime order p
  not_in_case_list,          // elements: a non-commuting pair; group not dihedral/Q8/Alt4/Sym4/Alt5
  two_order_d_subgroups,     // subloops: two distinct subloops of order d
  no_order_d_subgroup,       // note only
  non_involution_outside,    // subloops: H; elements: x outside H that is not an involution
  involutions_clash,         // subloops: H; elements: u, v outside H, uv != vu and uv not in H
  several_involutions,       // elements: at least two involutions
  pair_not_q8,               // elements: non-commuting x, y whose closure is not Q8
  mixed_orders,              // elements: x, y of different orders
  order_not_two_or_three,    // elements: x
  exponent_three,            // note only
  no_o16_or_alt4,            // note only
};

struct Certificate {
  Witness kind = Witness::none;
  std::vector<int> elements;
  std::vector<SubloopSet> subloops;
  std::string note;
};

inline constexpr std::string_view kHypothesisNote = "n>=4 and (p=0 or p>n)";

struct GateReport {
  Verdict verdict = Verdict::inconclusive;
  Rule rule = Rule::none;
  std::string case_tag;  // "I".."VI" for groups, "a"/"b" for the diassociative theorem
  Certificate certificate;
  std::string hypothesis_note{kHypothesisNote};
  std::vector<GateReport> parts;  // sub-gate reports from gate_full
};

GateReport gate_group(const LoopTable& loop);
GateReport gate_diassoc(const LoopTable& loop);
GateReport gate_q8(const LoopTable& loop);
GateReport gate_commutative(const LoopTable& loop);
GateReport gate_moufang(const LoopTable& loop);

/// Groups go to gate_group; diassociative non-groups run every applicable gate and any
/// exclusion wins (precedence: max order, unique involution, equal orders, Moufang). Anything else is inconclusive.
GateReport gate_full(const LoopTable& loop);

// "verdict: ...", "rule: ...", "case: ..." (when set), "certificate: ...", "hypothesis: ...".
std::string render(const GateReport& report);

/// Re-derives the violation from the witness data alone; true when the certificate holds up.
bool replay_certificate(const LoopTable& loop, const GateReport& report);

}  // namespace loopnet
