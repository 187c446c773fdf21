#include "loopnet/gate.hpp"

#include <algorithm>
#include <sstream>

#include "loopnet/catalog.hpp"

namespace loopnet {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::excluded: return "excluded";
    case Verdict::admitted: return "admitted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::group_list: return "thm1.2";
    case Rule::max_order: return "thm1.3";
    case Rule::unique_involution: return "thm2";
    case Rule::equal_orders: return "cor";
    case Rule::moufang: return "moufang";
    case Rule::none: return "none";
  }
  return "none";
}

namespace {

GateReport make_report(Verdict v, Rule r, std::string case_tag = {}, Certificate cert = {}) {
  GateReport rep;
  rep.verdict = v;
  rep.rule = r;
  rep.case_tag = std::move(case_tag);
  rep.certificate = std::move(cert);
  return rep;
}

GateReport too_small(Rule r) {
  Certificate cert;
  cert.note = "order < 4 is outside the hypothesis";
  return make_report(Verdict::inconclusive, r, {}, cert);
}

bool commute(const LoopTable& loop, int x, int y) { return loop(x, y) == loop(y, x); }

// Three independent elements of order p in an abelian group, if the p-rank is >= 3.
std::optional<std::vector<int>> rank_three_witness(const LoopTable& loop) {
  const int n = loop.order();
  for (int p = 2; p <= n; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime || n % p) continue;
    std::vector<int> picked;
    SubloopSet span{{0}};
    for (int x = 1; x < n && picked.size() < 3; ++x) {
      if (element_order(loop, x) != p || span.contains(x)) continue;
      picked.push_back(x);
      span = generated_subloop(loop, picked);
    }
    if (picked.size() == 3) return picked;
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> noncommuting_pair(const LoopTable& loop) {
  for (int x = 1; x < loop.order(); ++x)
    for (int y = x + 1; y < loop.order(); ++y)
      if (!commute(loop, x, y)) return std::pair{x, y};
  return std::nullopt;
}

// Sporadic/dihedral case tag of a non-abelian group, empty when none applies.
std::string nonabelian_case(const LoopTable& loop) {
  const int n = loop.order();
  if (n % 2 == 0 && n >= 6 && is_isomorphic(loop, dihedral(n / 2))) return "II";
  if (n == 8 && is_isomorphic(loop, quaternion8())) return "III";
  if (n == 12 && is_isomorphic(loop, alt4())) return "IV";
  if (n == 24 && is_isomorphic(loop, sym4())) return "V";
  if (n == 60 && is_isomorphic(loop, alt5())) return "VI";
  return {};
}

std::vector<int> involutions(const LoopTable& loop) {
  std::vector<int> out;
  for (int x = 1; x < loop.order(); ++x)
    if (loop(x, x) == 0) out.push_back(x);
  return out;
}

bool contains_q8(const LoopTable& loop) { return find_subloop_isomorphic(loop, quaternion8()).has_value(); }
bool contains_alt4(const LoopTable& loop) {
  return loop.order() >= 12 && find_subloop_isomorphic(loop, alt4()).has_value();
}
bool contains_o16(const LoopTable& loop) {
  return loop.order() >= 16 && find_subloop_isomorphic(loop, octonion16()).has_value();
}

std::vector<SubloopSet> subloops_of_order(const LoopTable& loop, int d) {
  std::vector<SubloopSet> out;
  for (auto& s : all_subloops(loop, d))
    if (s.size() == d) out.push_back(std::move(s));
  return out;
}

// Condition (a) of the diassociative theorem for a given unique H; returns the violation, if any.
std::optional<Certificate> condition_a_violation(const LoopTable& loop, const SubloopSet& h) {
  std::vector<int> outside;
  for (int x = 1; x < loop.order(); ++x)
    if (!h.contains(x)) outside.push_back(x);
  for (int x : outside)
    if (loop(x, x) != 0) return Certificate{Witness::non_involution_outside, {x}, {h}, {}};
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      const int u = outside[i], v = outside[j];
      if (!commute(loop, u, v) && !h.contains(loop(u, v)))
        return Certificate{Witness::involutions_clash, {u, v}, {h}, {}};
    }
  return std::nullopt;
}

}  // namespace

GateReport gate_group(const LoopTable& loop) {
  if (!is_associative(loop)) throw Error(Errc::NotAGroup, "gate_group needs a group");
  if (loop.order() < 4) return too_small(Rule::group_list);

  if (auto inv = abelian_invariants(loop)) {
    if (inv->size() <= 2) {
      Certificate cert;
      cert.note = "invariant factors " + identify(loop);
      return make_report(Verdict::admitted, Rule::group_list, "I", cert);
    }
    Certificate cert{Witness::rank_three_subgroup, *rank_three_witness(loop), {}, {}};
    cert.note = std::to_string(inv->size()) + " invariant factors";
    return make_report(Verdict::excluded, Rule::group_list, {}, cert);
  }
  if (auto tag = nonabelian_case(loop); !tag.empty()) {
    Certificate cert;
    cert.note = identify(loop);
    return make_report(Verdict::admitted, Rule::group_list, tag, cert);
  }
  const auto [x, y] = *noncommuting_pair(loop);
  Certificate cert{Witness::not_in_case_list, {x, y}, {}, "non-abelian, not dihedral, Q8, Alt4, Sym4 or Alt5"};
  return make_report(Verdict::excluded, Rule::group_list, {}, cert);
}

GateReport gate_diassoc(const LoopTable& loop) {
  const auto probe = structure_probe(loop);
  if (probe.is_group) throw Error(Errc::IsAGroup, "gate_diassoc applies to non-groups");
  if (!probe.is_diassociative) throw Error(Errc::NotDiassociative, "gate_diassoc needs a diassociative loop");
  if (loop.order() < 4) return too_small(Rule::max_order);
  const int d = probe.max_order;
  if (d <= 3) {
    Certificate cert;
    cert.note = "max element order " + std::to_string(d) + " <= 3";
    return make_report(Verdict::inconclusive, Rule::max_order, {}, cert);
  }

  const auto order_d = subloops_of_order(loop, d);
  std::optional<Certificate> violation;
  if (order_d.size() == 1) {
    violation = condition_a_violation(loop, order_d.front());
    if (!violation) {
      Certificate cert;
      cert.subloops = {order_d.front()};
      cert.note = "unique subgroup of order " + std::to_string(d);
      return make_report(Verdict::admitted, Rule::max_order, "a", cert);
    }
  } else if (order_d.size() >= 2) {
    violation = Certificate{Witness::two_order_d_subgroups, {}, {order_d[0], order_d[1]}, {}};
  } else {
    violation = Certificate{Witness::no_order_d_subgroup, {}, {}, {}};
  }

  if (d == 4) {
    if (auto q8 = find_subloop_isomorphic(loop, quaternion8())) {
      Certificate cert;
      cert.subloops = {*q8};
      cert.note = "d = 4 with a Q8 subgroup";
      return make_report(Verdict::admitted, Rule::max_order, "b", cert);
    }
    if (loop.order() >= 12) {
      if (auto a4 = find_subloop_isomorphic(loop, alt4())) {
        Certificate cert;
        cert.subloops = {*a4};
        cert.note = "d = 4 with an Alt4 subgroup";
        return make_report(Verdict::admitted, Rule::max_order, "b", cert);
      }
    }
  }
  violation->note = "d = " + std::to_string(d) + (violation->note.empty() ? "" : "; " + violation->note);
  return make_report(Verdict::excluded, Rule::max_order, {}, *violation);
}

GateReport gate_q8(const LoopTable& loop) {
  const auto probe = structure_probe(loop);
  if (probe.is_group || !probe.is_diassociative)
    throw Error(Errc::PreconditionUnmet, "gate_q8 needs a diassociative non-group");
  if (!contains_q8(loop) || contains_alt4(loop))
    throw Error(Errc::PreconditionUnmet, "gate_q8 needs a Q8 subgroup and no Alt4 subgroup");
  if (loop.order() < 4) return too_small(Rule::unique_involution);

  const auto invs = involutions(loop);
  if (invs.size() != 1) {
    Certificate cert{Witness::several_involutions, invs, {}, std::to_string(invs.size()) + " involutions"};
    return make_report(Verdict::excluded, Rule::unique_involution, {}, cert);
  }
  const LoopTable q8 = quaternion8();
  for (int x = 1; x < loop.order(); ++x)
    for (int y = x + 1; y < loop.order(); ++y) {
      if (commute(loop, x, y)) continue;
      const auto sub = generated_subloop(loop, {x, y});
      if (sub.size() != 8 || !is_isomorphic(restrict_to(loop, sub), q8)) {
        Certificate cert{Witness::pair_not_q8, {x, y}, {sub}, "non-commuting pair not generating Q8"};
        return make_report(Verdict::excluded, Rule::unique_involution, {}, cert);
      }
    }
  Certificate cert;
  cert.elements = invs;
  cert.note = "unique involution; non-commuting pairs generate Q8";
  return make_report(Verdict::admitted, Rule::unique_involution, {}, cert);
}

GateReport gate_commutative(const LoopTable& loop) {
  const auto probe = structure_probe(loop);
  if (probe.is_group || !probe.is_diassociative || !probe.is_commutative)
    throw Error(Errc::PreconditionUnmet, "gate_commutative needs a commutative diassociative non-group");
  if (loop.order() < 4) return too_small(Rule::equal_orders);
  const int first = element_order(loop, 1);
  for (int x = 2; x < loop.order(); ++x)
    if (element_order(loop, x) != first) {
      Certificate cert{Witness::mixed_orders, {1, x}, {}, "non-identity elements of different orders"};
      return make_report(Verdict::excluded, Rule::equal_orders, {}, cert);
    }
  if (first != 2 && first != 3) {
    Certificate cert{Witness::order_not_two_or_three, {1}, {}, "exponent " + std::to_string(first)};
    return make_report(Verdict::excluded, Rule::equal_orders, {}, cert);
  }
  Certificate cert;
  cert.note = "exponent " + std::to_string(first);
  return make_report(Verdict::admitted, Rule::equal_orders, {}, cert);
}

GateReport gate_moufang(const LoopTable& loop) {
  if (is_associative(loop)) throw Error(Errc::IsAGroup, "gate_moufang applies to non-groups");
  if (!is_moufang(loop)) throw Error(Errc::NotMoufang, "gate_moufang needs a Moufang loop");
  if (loop.order() < 4) return too_small(Rule::moufang);
  const auto probe = structure_probe(loop);
  if (probe.exponent == 3) {
    Certificate cert{Witness::exponent_three, {}, {}, "exponent 3 forces a subgroup of order 27"};
    return make_report(Verdict::excluded, Rule::moufang, {}, cert);
  }
  if (auto o16 = contains_o16(loop) ? find_subloop_isomorphic(loop, octonion16()) : std::nullopt) {
    Certificate cert;
    cert.subloops = {*o16};
    cert.note = "contains O16";
    return make_report(Verdict::admitted, Rule::moufang, {}, cert);
  }
  if (loop.order() >= 12) {
    if (auto a4 = find_subloop_isomorphic(loop, alt4())) {
      Certificate cert;
      cert.subloops = {*a4};
      cert.note = "contains Alt4";
      return make_report(Verdict::admitted, Rule::moufang, {}, cert);
    }
  }
  Certificate cert{Witness::no_o16_or_alt4, {}, {}, "no O16 subloop and no Alt4 subgroup"};
  return make_report(Verdict::excluded, Rule::moufang, {}, cert);
}

GateReport gate_full(const LoopTable& loop) {
  if (loop.order() < 4) return too_small(Rule::none);
  const auto probe = structure_probe(loop);
  if (probe.is_group) return gate_group(loop);
  if (!probe.is_diassociative) {
    Certificate cert;
    cert.note = "not diassociative; no applicable theorem";
    return make_report(Verdict::inconclusive, Rule::none, {}, cert);
  }

  GateReport full;
  full.parts.push_back(gate_diassoc(loop));
  if (contains_q8(loop) && !contains_alt4(loop)) full.parts.push_back(gate_q8(loop));
  if (probe.is_commutative) full.parts.push_back(gate_commutative(loop));
  if (probe.is_moufang) full.parts.push_back(gate_moufang(loop));

  const GateReport* decisive = nullptr;
  for (const auto& part : full.parts)
    if (part.verdict == Verdict::excluded) {
      decisive = &part;
      break;
    }
  if (!decisive)
    for (const auto& part : full.parts)
      if (part.verdict == Verdict::admitted) {
        decisive = &part;
        break;
      }
  if (!decisive) {
    full.verdict = Verdict::inconclusive;
    full.rule = Rule::none;
    full.certificate.note = "no applicable gate decides";
    return full;
  }
  full.verdict = decisive->verdict;
  full.rule = decisive->rule;
  full.case_tag = decisive->case_tag;
  full.certificate = decisive->certificate;
  return full;
}

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

// Alternative (b) of the diassociative theorem.
bool case_b_holds(const LoopTable& loop) {
  return structure_probe(loop).max_order == 4 && (contains_q8(loop) || contains_alt4(loop));
}

}  // namespace

std::string render(const GateReport& report) {
  std::ostringstream os;
  os << "verdict: " << verdict_name(report.verdict) << '\n';
  os << "rule: " << rule_name(report.rule) << '\n';
  if (!report.case_tag.empty()) os << "case: " << report.case_tag << '\n';
  os << "certificate:";
  const auto& cert = report.certificate;
  if (!cert.elements.empty()) os << " elements [" << join(cert.elements) << "]";
  for (const auto& s : cert.subloops) os << " subloop {" << join(s.elements) << "}";
  if (!cert.note.empty()) os << " (" << cert.note << ")";
  os << '\n';
  os << "hypothesis: " << report.hypothesis_note << '\n';
  return os.str();
}

bool replay_certificate(const LoopTable& loop, const GateReport& report) {
  if (report.verdict != Verdict::excluded) return true;
  const auto& cert = report.certificate;
  const auto& el = cert.elements;
  switch (cert.kind) {
    case Witness::none: return false;
    case Witness::rank_three_subgroup: {
      if (el.size() != 3 || !abelian_invariants(loop)) return false;
      const int p = element_order(loop, el[0]);
      if (element_order(loop, el[1]) != p || element_order(loop, el[2]) != p) return false;
      return generated_subloop(loop, el).size() == p * p * p;
    }
    case Witness::not_in_case_list:
      return el.size() == 2 && is_associative(loop) && !commute(loop, el[0], el[1]) &&
             nonabelian_case(loop).empty();
    case Witness::two_order_d_subgroups: {
      if (cert.subloops.size() != 2 || cert.subloops[0] == cert.subloops[1]) return false;
      const int d = structure_probe(loop).max_order;
      for (const auto& s : cert.subloops)
        if (s.size() != d || !is_subloop(loop, s.elements)) return false;
      return !case_b_holds(loop);
    }
    case Witness::no_order_d_subgroup:
      return subloops_of_order(loop, structure_probe(loop).max_order).empty() && !case_b_holds(loop);
    case Witness::non_involution_outside:
      return cert.subloops.size() == 1 && el.size() == 1 && is_subloop(loop, cert.subloops[0].elements) &&
             !cert.subloops[0].contains(el[0]) && loop(el[0], el[0]) != 0 && !case_b_holds(loop);
    case Witness::involutions_clash: {
      if (cert.subloops.size() != 1 || el.size() != 2) return false;
      const auto& h = cert.subloops[0];
      const int u = el[0], v = el[1];
      return is_subloop(loop, h.elements) && !h.contains(u) && !h.contains(v) && !commute(loop, u, v) &&
             !h.contains(loop(u, v)) && !case_b_holds(loop);
    }
    case Witness::several_involutions: {
      if (el.size() < 2) return false;
      return std::all_of(el.begin(), el.end(), [&](int x) { return x != 0 && loop(x, x) == 0; });
    }
    case Witness::pair_not_q8: {
      if (el.size() != 2 || commute(loop, el[0], el[1])) return false;
      const auto sub = generated_subloop(loop, el);
      return sub.size() != 8 || !is_isomorphic(restrict_to(loop, sub), quaternion8());
    }
    case Witness::mixed_orders:
      return el.size() == 2 && element_order(loop, el[0]) != element_order(loop, el[1]);
    case Witness::order_not_two_or_three: {
      if (el.size() != 1) return false;
      const int o = element_order(loop, el[0]);
      return o != 2 && o != 3;
    }
    case Witness::exponent_three: return is_moufang(loop) && structure_probe(loop).exponent == 3;
    case Witness::no_o16_or_alt4: return is_moufang(loop) && !contains_o16(loop) && !contains_alt4(loop);
  }
  return false;
}

}  // namespace loopnet
