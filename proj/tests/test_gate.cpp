#include <numeric>

#include "doctest.h"
#include "loopnet/catalog.hpp"
#include "loopnet/gate.hpp"
#include "test_util.hpp"

using namespace loopnet;

namespace {

LoopTable relabeled(const LoopTable& loop) {
  std::vector<int> perm(static_cast<std::size_t>(loop.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), testutil::rng());
  return transport(loop, perm);
}

LoopTable extension_q() {
  return *central_extension_search(steiner_from_sts(ag23_sts()), 10'000'000).loop;
}

}  // namespace

TEST_CASE("group classification") {
  const auto c24 = gate_group(product(2, 4));
  CHECK(c24.verdict == Verdict::admitted);
  CHECK(c24.rule == Rule::group_list);
  CHECK(c24.case_tag == "I");
  const auto q8 = gate_group(quaternion8());
  CHECK(q8.verdict == Verdict::admitted);
  CHECK(q8.case_tag == "III");
  CHECK(gate_group(dihedral(5)).case_tag == "II");
  CHECK(gate_group(alt4()).case_tag == "IV");
  CHECK(gate_group(sym4()).case_tag == "V");
  CHECK(gate_group(alt5()).case_tag == "VI");

  const auto c222 = gate_group(elementary_abelian(2, 3));
  CHECK(c222.verdict == Verdict::excluded);
  CHECK(c222.certificate.kind == Witness::rank_three_subgroup);
  CHECK(replay_certificate(elementary_abelian(2, 3), c222));

  for (const auto& g : {direct_product(quaternion8(), cyclic(2)), direct_product(product(2, 2), cyclic(4)),
                        elementary_abelian(3, 3), direct_product(dihedral(3), cyclic(3)), direct_product(alt4(), cyclic(2))}) {
    REQUIRE(is_associative(g));
    const auto r = gate_group(g);
    CHECK(r.verdict == Verdict::excluded);
    CHECK(replay_certificate(g, r));
  }
  CHECK(gate_group(cyclic(3)).verdict == Verdict::inconclusive);
  CHECK_THROWS_WITH_AS(gate_group(octonion16()), doctest::Contains("NotAGroup"), Error);
}

TEST_CASE("admitted group corpus") {
  for (int n = 4; n <= 30; ++n) CHECK(gate_full(cyclic(n)).verdict == Verdict::admitted);
  for (int a = 1; a <= 36; ++a)
    for (int b = a; a * b <= 36; ++b)
      if (a * b >= 4) CHECK(gate_full(product(a, b)).verdict == Verdict::admitted);
  for (int d = 2; d <= 12; ++d) CHECK(gate_full(dihedral(d)).verdict == Verdict::admitted);
}

TEST_CASE("diassociative theorem") {
  const auto o = gate_diassoc(octonion16());
  CHECK(o.verdict == Verdict::admitted);
  CHECK(o.case_tag == "b");
  const auto cq = gate_diassoc(chein_double(quaternion8()));
  CHECK(cq.verdict == Verdict::admitted);

  // replay of a two-subgroup witness
  GateReport fake;
  fake.verdict = Verdict::excluded;
  fake.certificate.kind = Witness::two_order_d_subgroups;
  const auto c55 = product(5, 5);
  fake.certificate.subloops = {generated_subloop(c55, {1}), generated_subloop(c55, {5})};
  CHECK(replay_certificate(c55, fake));
  fake.certificate.subloops = {generated_subloop(c55, {1}), generated_subloop(c55, {1})};
  CHECK_FALSE(replay_certificate(c55, fake));

  CHECK_THROWS_WITH_AS(gate_diassoc(cyclic(6)), doctest::Contains("IsAGroup"), Error);
  const auto nd =
      validate_table({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
  CHECK_THROWS_WITH_AS(gate_diassoc(nd), doctest::Contains("NotDiassociative"), Error);
  // d = 3 is outside the theorem
  CHECK(gate_diassoc(chein_double(dihedral(3))).verdict == Verdict::inconclusive);
}

TEST_CASE("Q8 theorem") {
  const auto o = gate_q8(octonion16());
  CHECK(o.verdict == Verdict::admitted);
  CHECK(o.rule == Rule::unique_involution);
  const auto cq = gate_q8(chein_double(quaternion8()));
  CHECK(cq.verdict == Verdict::excluded);
  CHECK(replay_certificate(chein_double(quaternion8()), cq));
  const auto q = extension_q();
  const auto rq = gate_q8(q);
  CHECK(rq.verdict == Verdict::excluded);
  CHECK(replay_certificate(q, rq));
  CHECK_THROWS_WITH_AS(gate_q8(steiner_from_sts(ag23_sts())), doctest::Contains("PreconditionUnmet"), Error);
}

TEST_CASE("commutative corollary") {
  const auto s = steiner_from_sts(ag23_sts());
  const auto rs = gate_commutative(s);
  CHECK(rs.verdict == Verdict::admitted);
  CHECK(rs.rule == Rule::equal_orders);
  CHECK_THROWS_WITH_AS(gate_commutative(octonion16()), doctest::Contains("PreconditionUnmet"), Error);

  // S x C4 and S x C3 stay commutative and diassociative
  const auto with4 = direct_product(s, cyclic(4));
  REQUIRE(is_diassociative(with4));
  const auto r4 = gate_commutative(with4);
  CHECK(r4.verdict == Verdict::excluded);
  CHECK(replay_certificate(with4, r4));
  const auto with3 = direct_product(s, cyclic(3));
  REQUIRE(is_diassociative(with3));
  const auto r3 = gate_commutative(with3);
  CHECK(r3.verdict == Verdict::excluded);
  CHECK(r3.certificate.kind == Witness::mixed_orders);
  CHECK(replay_certificate(with3, r3));
}

TEST_CASE("Moufang theorem") {
  const auto s3 = chein_double(dihedral(3));
  const auto r = gate_moufang(s3);
  CHECK(r.verdict == Verdict::excluded);
  CHECK(replay_certificate(s3, r));
  CHECK(gate_moufang(octonion16()).verdict == Verdict::admitted);
  const auto cq = gate_moufang(chein_double(quaternion8()));
  CHECK(cq.verdict == Verdict::excluded);
  // Chein double of Alt4 contains Alt4
  CHECK(gate_moufang(chein_double(alt4())).verdict == Verdict::admitted);
  CHECK_THROWS_WITH_AS(gate_moufang(cyclic(5)), doctest::Contains("IsAGroup"), Error);
  CHECK_THROWS_WITH_AS(gate_moufang(steiner_from_sts(ag23_sts())), doctest::Contains("NotMoufang"), Error);
}

TEST_CASE("full gate dispatch") {
  const auto c7 = gate_full(cyclic(7));
  CHECK(c7.verdict == Verdict::admitted);
  CHECK(c7.case_tag == "I");
  const auto q = gate_full(extension_q());
  CHECK(q.verdict == Verdict::excluded);
  CHECK(q.rule == Rule::unique_involution);
  const auto nd =
      validate_table({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
  CHECK(gate_full(nd).verdict == Verdict::inconclusive);
  CHECK(gate_full(cyclic(3)).verdict == Verdict::inconclusive);
  const auto cq = gate_full(chein_double(quaternion8()));
  CHECK(cq.verdict == Verdict::excluded);
  CHECK(cq.rule == Rule::unique_involution);
  CHECK_FALSE(cq.parts.empty());
  const auto o = gate_full(octonion16());
  CHECK(o.verdict == Verdict::admitted);

  const auto text = render(gate_full(elementary_abelian(2, 3)));
  CHECK(text.find("verdict: excluded\n") == 0);
  CHECK(text.find("rule: thm1.2\n") != std::string::npos);
  CHECK(text.find("certificate: elements [") != std::string::npos);
  CHECK(text.find("hypothesis: n>=4 and (p=0 or p>n)\n") != std::string::npos);
}

TEST_CASE("verdicts are invariant under relabeling") {
  for (const auto& loop : {product(2, 6), dihedral(4), elementary_abelian(2, 3), octonion16(),
                           chein_double(quaternion8()), chein_double(dihedral(3)), steiner_from_sts(ag23_sts()),
                           extension_q(), alt4()}) {
    const auto a = gate_full(loop);
    const auto moved = relabeled(loop);
    const auto b = gate_full(moved);
    CHECK(a.verdict == b.verdict);
    CHECK(a.rule == b.rule);
    CHECK(replay_certificate(moved, b));
  }
}
