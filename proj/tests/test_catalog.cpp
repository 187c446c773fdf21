#include <algorithm>
#include <set>

#include "doctest.h"
#include "loopnet/catalog.hpp"
#include "loopnet/gate.hpp"
#include "loopnet/loop.hpp"

using namespace loopnet;

namespace {

int count_order(const LoopTable& loop, int ord) {
  int c = 0;
  for (int x = 0; x < loop.order(); ++x) c += element_order(loop, x) == ord;
  return c;
}

// Octonion product on signed units, computed from the Fano triples without the table.
std::pair<int, int> unit_product(int a, int b) {
  if (a == 0) return {b, 0};
  if (b == 0) return {a, 0};
  if (a == b) return {0, 1};
  for (const auto& t : kFanoTriples)
    for (int r = 0; r < 3; ++r) {
      const int x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
      if (a == x && b == y) return {z, 0};
      if (a == y && b == x) return {z, 1};
    }
  return {-1, 0};
}

std::set<std::set<int>> block_set(const TripleSystem& t) {
  std::set<std::set<int>> out;
  for (const auto& b : t.blocks) out.insert({b[0], b[1], b[2]});
  return out;
}

}  // namespace

TEST_CASE("named groups") {
  CHECK(cyclic(1).order() == 1);
  const auto q = structure_probe(quaternion8());
  CHECK(q.order_spectrum == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(q.is_group);
  const auto d7 = dihedral(7);
  CHECK(d7.order() == 14);
  for (int k = 7; k < 14; ++k) CHECK(element_order(d7, k) == 2);
  CHECK(count_order(d7, 2) == 7);
  // h g h = g^-1 with g = 1, h = d
  CHECK(d7(d7(7, 1), 7) == 6);
  CHECK(alt4().order() == 12);
  CHECK(sym4().order() == 24);
  CHECK(alt5().order() == 60);
  CHECK(structure_probe(alt5()).order_spectrum == std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
  CHECK(structure_probe(sym4()).order_spectrum == std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
  CHECK(count_order(alt4(), 3) == 8);
  CHECK(is_isomorphic(make_group({GroupKind::product, 3, 4}), make_group({GroupKind::product, 4, 3})));
  CHECK(is_isomorphic(make_group({GroupKind::dihedral, 3, 1}), dihedral(3)));
  CHECK_THROWS_WITH_AS(dihedral(1), doctest::Contains("BadParameter"), Error);
  CHECK_THROWS_WITH_AS(cyclic(0), doctest::Contains("BadParameter"), Error);
  for (const auto& g : {alt4(), sym4(), alt5(), dihedral(6)}) CHECK(is_associative(g));
}

TEST_CASE("octonion loop") {
  const auto o = octonion16();
  const auto r = structure_probe(o);
  CHECK(r.is_moufang);
  CHECK_FALSE(r.is_group);
  CHECK(r.involution_count == 1);
  CHECK(r.order_spectrum.at(4) == 14);
  CHECK(identify(o) == "O16");
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto [unit, sign] = unit_product(a, b);
      REQUIRE(unit >= 0);
      CHECK(o(2 * a, 2 * b) == 2 * unit + sign);
      // signs multiply
      CHECK(o(2 * a + 1, 2 * b) == 2 * unit + (1 - sign));
      CHECK(o(2 * a + 1, 2 * b + 1) == 2 * unit + sign);
    }
  // every two-generated subloop is a group
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y) CHECK(is_associative(restrict_to(o, generated_subloop(o, {x, y}))));
}

TEST_CASE("Chein doubles") {
  CHECK(is_isomorphic(chein_double(cyclic(2)), product(2, 2)));
  const auto s3 = chein_double(dihedral(3));
  CHECK(s3.order() == 12);
  CHECK(is_moufang(s3));
  CHECK_FALSE(is_associative(s3));
  const auto q = chein_double(quaternion8());
  CHECK(q.order() == 16);
  CHECK(is_moufang(q));
  CHECK(structure_probe(q).involution_count >= 9);
  CHECK_FALSE(is_isomorphic(q, octonion16()));
  for (const auto& g : {cyclic(3), cyclic(4), product(2, 2), dihedral(4), alt4()}) {
    const auto m = chein_double(g);
    CHECK(is_moufang(m));
    CHECK(is_associative(m) == is_commutative(g));
  }
  CHECK_THROWS_WITH_AS(chein_double(octonion16()), doctest::Contains("NotAGroup"), Error);
  CHECK_NOTHROW(chein_double(octonion16(), false));
}

TEST_CASE("Steiner loops") {
  const TripleSystem one{3, {{0, 1, 2}}};
  CHECK(is_isomorphic(steiner_from_sts(one), product(2, 2)));

  const auto ag = ag23_sts();
  CHECK(ag.point_count == 9);
  CHECK(ag.blocks.size() == 12);
  std::vector<int> replication(9, 0);
  for (const auto& b : ag.blocks)
    for (int x : b) ++replication[x];
  CHECK(std::all_of(replication.begin(), replication.end(), [](int r) { return r == 4; }));

  const auto s = steiner_from_sts(ag);
  CHECK(s.order() == 10);
  CHECK(structure_probe(s).is_steiner);
  CHECK(is_commutative(s));
  CHECK(block_set(sts_from_steiner(s)) == block_set(ag));

  const TripleSystem fano{7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
  const auto f = steiner_from_sts(fano);
  CHECK(is_isomorphic(f, elementary_abelian(2, 3)));
  CHECK(block_set(sts_from_steiner(f)) == block_set(fano));

  CHECK_THROWS_WITH_AS(validate_sts({4, {{0, 1, 2}}}), doctest::Contains("NotAnSTS"), Error);
  CHECK_THROWS_WITH_AS(validate_sts({3, {{0, 1, 2}, {0, 1, 2}}}), doctest::Contains("NotAnSTS"), Error);
}

TEST_CASE("central extension of the order-10 Steiner loop") {
  const auto s = steiner_from_sts(ag23_sts());
  const auto r = central_extension_search(s, 10'000'000);
  REQUIRE(r.status == SearchStatus::found);
  const auto& q = *r.loop;
  CHECK(q.order() == 20);
  const auto probe = structure_probe(q);
  CHECK(probe.is_diassociative);
  CHECK_FALSE(probe.is_group);
  CHECK(probe.involution_count >= 2);
  CHECK(find_subloop_isomorphic(q, product(2, 4)));
  const std::vector<LoopTable> allowed = {cyclic(2), product(2, 2), cyclic(4), product(2, 4), quaternion8()};
  for (const auto& sub : all_subloops(q, 19)) {
    if (sub.size() == 1) continue;
    const auto t = restrict_to(q, sub);
    CHECK(std::any_of(allowed.begin(), allowed.end(), [&](const LoopTable& a) { return is_isomorphic(t, a); }));
  }
  // (x, a) -> x is a homomorphism onto S
  for (int a = 0; a < 20; ++a)
    for (int b = 0; b < 20; ++b) CHECK(q(a, b) % 10 == s(a % 10, b % 10));
  const auto g = gate_full(q);
  CHECK(g.verdict == Verdict::excluded);
  CHECK(g.rule == Rule::unique_involution);
}

TEST_CASE("central extension with the literal subloop list") {
  const auto s = steiner_from_sts(ag23_sts());
  const auto r = central_extension_search(s, 10'000'000, literal_profile());
  REQUIRE(r.status == SearchStatus::found);
  CHECK(structure_probe(*r.loop).involution_count == 1);
  CHECK(gate_full(*r.loop).verdict == Verdict::admitted);

  auto strict = literal_profile();
  strict.required = {product(2, 4)};
  CHECK(central_extension_search(s, 10'000'000, strict).status == SearchStatus::exhausted);
  CHECK(central_extension_search(s, 5).status == SearchStatus::budget_exceeded);
}

TEST_CASE("identify") {
  CHECK(identify(cyclic(6)) == "C6");
  CHECK(identify(product(2, 6)) == "C2xC6");
  CHECK(identify(cyclic(1)) == "C1");
  CHECK(identify(dihedral(3)) == "Dih_3");
  CHECK(identify(quaternion8()) == "Q8");
  CHECK(identify(alt4()) == "Alt4");
  CHECK(identify(steiner_from_sts(ag23_sts())) == "Steiner loop of order 10");
}
