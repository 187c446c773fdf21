// One line per acceptance criterion; exit status 1 when any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "loopnet/builders.hpp"
#include "loopnet/catalog.hpp"
#include "loopnet/engine.hpp"
#include "loopnet/gate.hpp"
#include "loopnet/search.hpp"

using namespace loopnet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Realized {
  LoopTable loop;
  std::uint32_t p;
  std::string source;
};

// Every net realized by a builder or the search, for the cross-module check.
std::vector<Realized> g_realized;

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

Outcome c1_octonion() {
  Outcome o;
  const auto r = structure_probe(octonion16());
  if (!r.is_moufang) fail(o, "not Moufang");
  if (r.is_group) fail(o, "associative");
  if (r.involution_count != 1) fail(o, "involutions = " + std::to_string(r.involution_count));
  const int order4 = r.order_spectrum.count(4) ? r.order_spectrum.at(4) : 0;
  if (order4 != 14) fail(o, "order-4 elements = " + std::to_string(order4));
  if (o.pass) o.detail = "Moufang, non-group, 1 involution, 14 elements of order 4";
  return o;
}

Outcome c2_gate_corpus() {
  Outcome o;
  std::vector<std::pair<std::string, LoopTable>> admitted, excluded;
  for (int n = 4; n <= 30; ++n) admitted.emplace_back("C" + std::to_string(n), cyclic(n));
  // ab < 4 lies outside the n >= 4 hypothesis
  for (int a = 1; a <= 36; ++a)
    for (int b = a; a * b <= 36; ++b)
      if (a * b >= 4) admitted.emplace_back("C" + std::to_string(a) + "xC" + std::to_string(b), product(a, b));
  for (int d = 2; d <= 12; ++d) admitted.emplace_back("Dih_" + std::to_string(d), dihedral(d));
  admitted.emplace_back("Q8", quaternion8());
  admitted.emplace_back("Alt4", alt4());
  admitted.emplace_back("Sym4", sym4());
  admitted.emplace_back("Alt5", alt5());
  excluded.emplace_back("C2^3", elementary_abelian(2, 3));
  excluded.emplace_back("C2^2xC4", direct_product(product(2, 2), cyclic(4)));
  excluded.emplace_back("Q8xC2", direct_product(quaternion8(), cyclic(2)));
  excluded.emplace_back("C3^3", elementary_abelian(3, 3));
  excluded.emplace_back("M(Sym3,2)", chein_double(dihedral(3)));
  excluded.emplace_back("M(Q8,2)", chein_double(quaternion8()));
  for (const auto& [name, loop] : admitted)
    if (gate_full(loop).verdict != Verdict::admitted) fail(o, name + " not admitted");
  for (const auto& [name, loop] : excluded) {
    const auto r = gate_full(loop);
    if (r.verdict != Verdict::excluded) fail(o, name + " not excluded");
    else if (!replay_certificate(loop, r)) fail(o, name + " certificate does not replay");
  }
  if (o.pass)
    o.detail = std::to_string(admitted.size()) + " admitted, " + std::to_string(excluded.size()) + " excluded";
  return o;
}

bool round_trip(const BuiltNet& b, const LoopTable& expected, Outcome& o, const std::string& tag) {
  if (!verify(b.net, true, &b.loop).pass) {
    fail(o, tag + ": verify failed");
    return false;
  }
  if (!is_isomorphic(recover_loop(b.net), expected)) {
    fail(o, tag + ": recovered loop differs");
    return false;
  }
  g_realized.push_back({expected, b.net.field.p, tag});
  return true;
}

// Criteria 3 and 4 share the built nets.
struct BuiltCorpus {
  std::vector<std::pair<std::string, BuiltNet>> algebraic;  // triangular, conic-line, elliptic
  std::vector<std::pair<std::string, BuiltNet>> tetra;
};
BuiltCorpus g_built;

Outcome c3_round_trips() {
  Outcome o;
  int count = 0;
  for (std::uint32_t p : {13u, 41u, 61u})
    for (int d = 1; d <= 20; ++d) {
      if ((p - 1) % d) continue;
      const std::string tp = "(" + std::to_string(d) + "," + std::to_string(p) + ")";
      const auto t = triangular(d, p);
      if (round_trip(t, cyclic(d), o, "triangular" + tp)) g_built.algebraic.emplace_back("triangular" + tp, t);
      ++count;
      if (d == static_cast<int>(p) - 1) {
        // mu_d is all of GF(p)*, there is no second coset for the line
        try {
          conic_line(d, p);
          fail(o, "conic_line" + tp + " should report CosetOverlap");
        } catch (const Error& e) {
          if (e.code() != Errc::CosetOverlap) fail(o, "conic_line" + tp + ": " + e.what());
        }
        continue;
      }
      const auto c = conic_line(d, p);
      if (round_trip(c, cyclic(d), o, "conic_line" + tp)) g_built.algebraic.emplace_back("conic_line" + tp, c);
      ++count;
    }
  for (std::uint32_t p : {7u, 11u, 13u})
    for (std::int64_t b = 1; b < p; ++b) {
      const WeierstrassCurve curve(0, b, p);
      const auto e = elliptic_auto(curve);
      const std::string tag = "elliptic(B=" + std::to_string(b) + ",p=" + std::to_string(p) + ")";
      // the labels must be an abelian group of order n sitting inside the curve group
      const auto inv = abelian_invariants(e.loop);
      const int total = static_cast<int>(ec_points(curve).size());
      if (!inv || total % e.net.n) fail(o, tag + ": unexpected loop");
      for (const auto& pt : e.net.all_points())
        if (!curve.contains(pt)) fail(o, tag + ": point off the curve");
      if (round_trip(e, e.loop, o, tag)) g_built.algebraic.emplace_back(tag, e);
      ++count;
    }
  const std::vector<std::pair<int, std::uint32_t>> tetra = {{3, 19},  {4, 29},  {5, 61},  {6, 43},  {7, 127},
                                                            {8, 89},  {9, 127}, {10, 151}, {11, 331}, {12, 193}};
  for (const auto& [d, p] : tetra) {
    const auto t = tetrahedron(d, p);
    const std::string tag = "tetrahedron(" + std::to_string(d) + "," + std::to_string(p) + ")";
    if (round_trip(t, dihedral(d), o, tag)) g_built.tetra.emplace_back(tag, t);
    ++count;
  }
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    round_trip(pencil(p), cyclic(static_cast<int>(p)), o, "pencil(" + std::to_string(p) + ")");
    ++count;
  }
  if (o.pass) o.detail = std::to_string(count) + " nets verified and recovered";
  return o;
}

Outcome c4_algebraicity() {
  Outcome o;
  int alg = 0, non = 0;
  for (const auto& [tag, b] : g_built.algebraic) {
    if (!is_algebraic(b.net)) fail(o, tag + " has no cubic");
    ++alg;
  }
  for (const auto& [tag, b] : g_built.tetra) {
    if (b.net.n < 8) continue;
    if (is_algebraic(b.net)) fail(o, tag + " lies on a cubic");
    ++non;
  }
  if (alg == 0 || non == 0) fail(o, "empty corpus");
  if (o.pass) o.detail = std::to_string(alg) + " on a cubic, " + std::to_string(non) + " tetrahedron nets on none";
  return o;
}

Outcome c5_elliptic_group() {
  Outcome o;
  const std::uint32_t p = 7;
  // brute force: affine solutions of y^2 = x^3 + 1 plus the point at infinity
  int points = 1, two_torsion = 1;
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y)
      if ((y * y) % p == (x * x * x + 1) % p) {
        ++points;
        two_torsion += y == 0;
      }
  if (points != 12) fail(o, "brute force counts " + std::to_string(points) + " points");
  // a cyclic group has at most 2 elements with 2x = 0; C2 x C6 has 4
  if (two_torsion != 4) fail(o, "2-torsion has " + std::to_string(two_torsion) + " elements");
  const WeierstrassCurve c(0, 1, p);
  if (ec_points(c).size() != 12) fail(o, "ec_points disagrees with brute force");
  if (ec_group_structure(c) != std::vector<int>{2, 6}) fail(o, "group structure is not C2xC6");
  if (o.pass) o.detail = "12 points, C2xC6";
  return o;
}

Outcome c6_search() {
  Outcome o;
  std::ostringstream d;
  auto run = [&](const LoopTable& loop, std::uint32_t p, bool expect_nets, const std::string& tag) {
    const auto r = search(loop, p);
    d << tag << ": " << r.nets.size() << " nets, " << r.nodes << " nodes" << (r.complete ? "" : " (budget)") << "; ";
    for (const auto& net : r.nets) {
      if (!verify(net, true, &loop).pass || !is_isomorphic(recover_loop(net), loop)) fail(o, tag + ": bad net");
    }
    if (!r.nets.empty()) g_realized.push_back({loop, p, "search " + tag});
    if (!r.complete) {
      // downgraded reading: no verified net found and no gate contradiction
      if (!expect_nets && r.nets.empty() && gate_full(loop).verdict == Verdict::excluded) return;
      fail(o, tag + ": budget tripped");
      return;
    }
    if (expect_nets && r.nets.empty()) fail(o, tag + ": no net");
    if (!expect_nets && !r.nets.empty()) fail(o, tag + ": unexpected net");
  };
  run(cyclic(3), 7, true, "C3/GF(7)");
  run(cyclic(5), 11, true, "C5/GF(11)");
  run(elementary_abelian(2, 3), 11, false, "C2^3/GF(11)");
  if (o.pass) o.detail = d.str().substr(0, d.str().size() - 2);
  return o;
}

Outcome c7_remark_pipeline() {
  Outcome o;
  std::ostringstream d;
  const auto s = steiner_from_sts(ag23_sts());
  const auto r = central_extension_search(s, 10'000'000);
  if (r.status == SearchStatus::found) {
    const auto& q = *r.loop;
    if (q.order() != 20) fail(o, "Q has order " + std::to_string(q.order()));
    if (!is_diassociative(q)) fail(o, "Q not diassociative");
    const std::vector<LoopTable> allowed = {cyclic(2), product(2, 2), cyclic(4), product(2, 4), quaternion8()};
    for (const auto& sub : all_subloops(q, 19)) {
      if (sub.size() == 1) continue;
      const auto t = restrict_to(q, sub);
      bool ok = false;
      for (const auto& a : allowed) ok = ok || is_isomorphic(t, a);
      if (!ok) fail(o, "Q has a subloop of another type");
    }
    const auto g = gate_full(q);
    if (g.verdict != Verdict::excluded || g.rule != Rule::unique_involution) fail(o, "Q not excluded via thm2");
    d << "Q of order 20 found, excluded via thm2";
  } else {
    d << (r.status == SearchStatus::budget_exceeded ? "extension search: budget" : "extension search: exhausted");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto m = chein_double(quaternion8());
  const auto g = gate_full(m);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (g.verdict != Verdict::excluded || g.rule != Rule::unique_involution) fail(o, "M(Q8,2) not excluded via thm2");
  if (secs >= 10) fail(o, "M(Q8,2) gate took " + std::to_string(secs) + " s");
  d << "; M(Q8,2) excluded via thm2";
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome c8_meta() {
  Outcome o;
  const auto order5 =
      validate_table({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
  const std::vector<std::pair<LoopTable, std::vector<std::uint32_t>>> extra = {
      {cyclic(4), {5, 13}},       {product(2, 2), {5, 7}}, {cyclic(6), {7, 13}},    {dihedral(3), {7, 11, 13}},
      {order5, {7, 11, 13}},      {quaternion8(), {11}},   {product(2, 4), {11}},   {dihedral(4), {11}},
      {elementary_abelian(2, 3), {11, 13}}};
  SearchOptions opt;
  opt.exhaustive = false;
  for (const auto& [loop, primes] : extra)
    for (auto p : primes) {
      const auto r = search(loop, p, opt);
      if (!r.nets.empty()) g_realized.push_back({loop, p, "search " + identify(loop)});
    }
  int checked = 0;
  for (const auto& real : g_realized) {
    if (real.p <= static_cast<std::uint32_t>(real.loop.order())) continue;
    ++checked;
    if (gate_full(real.loop).verdict == Verdict::excluded) fail(o, real.source + " is realized but gate-excluded");
  }
  if (o.pass) o.detail = std::to_string(checked) + " realizations with p > n, none gate-excluded";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"O16 structure", c1_octonion},
      {"gate corpus", c2_gate_corpus},
      {"builder/verifier round trips", c3_round_trips},
      {"algebraicity dichotomy", c4_algebraicity},
      {"elliptic group structure", c5_elliptic_group},
      {"search soundness/completeness", c6_search},
      {"central extension pipeline", c7_remark_pipeline},
      {"gate vs search consistency", c8_meta},
  };
  const std::vector<double> limits = {1, 30, 300, 300, 60, 600, 60, 600};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limits[i]) fail(o, "took " + std::to_string(secs) + " s");
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << " ("
              << o.detail << ", " << static_cast<int>(secs * 1000) << " ms)" << std::endl;
  }
  return all ? 0 : 1;
}
