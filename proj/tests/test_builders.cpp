#include "doctest.h"
#include "loopnet/builders.hpp"
#include "loopnet/catalog.hpp"
#include "loopnet/engine.hpp"
#include "test_util.hpp"

using namespace loopnet;

namespace {

void check_round_trip(const BuiltNet& b, const LoopTable& expected) {
  CHECK(testutil::brute_force_net(b.net, &b.loop));
  CHECK(verify(b.net, true, &b.loop).pass);
  CHECK(is_isomorphic(recover_loop(b.net, 0, 0), expected));
  CHECK(is_isomorphic(b.loop, expected));
}

// The form lies in the span of the basis (rank does not grow when it is appended).
bool in_span(const std::vector<CubicForm<Fp>>& basis, const CubicForm<Fp>& f) {
  MatrixX<Fp> m(static_cast<Eigen::Index>(basis.size()) + 1, 10);
  for (std::size_t i = 0; i < basis.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = basis[i].coeffs().transpose();
  m.row(static_cast<Eigen::Index>(basis.size())) = f.coeffs().transpose();
  return rank(m) == static_cast<Eigen::Index>(basis.size());
}

bool on_coordinate_triangle(const ProjPoint<Fp>& p) { return p[0].is_zero() || p[1].is_zero() || p[2].is_zero(); }

}  // namespace

TEST_CASE("triangular nets") {
  const auto c2 = triangular(2, 5);
  CHECK(c2.net.n == 2);
  CHECK(c2.net.all_points().size() == 6);
  check_round_trip(c2, cyclic(2));

  const auto c4 = triangular(4, 13, 1, 1);
  check_round_trip(c4, cyclic(4));
  for (const auto& p : c4.net.all_points()) CHECK(on_coordinate_triangle(p));

  check_round_trip(triangular(6, 13, 2, 5), cyclic(6));
  CHECK_THROWS_WITH_AS(triangular(5, 13), doctest::Contains("NoSuchRoots"), Error);
  CHECK_THROWS_AS(triangular(3, 7, 0, 1), Error);
}

TEST_CASE("triangular points lie on xyz = 0") {
  const auto b = triangular(3, 7);
  const auto basis = fit_curve(b.net.all_points(), 3);
  VectorX<Fp> xyz = VectorX<Fp>::Constant(10, Fp(0, 7));
  xyz(4) = Fp(1, 7);
  CHECK(in_span(basis, CubicForm<Fp>(3, xyz)));
  // with d = 3 the nine points also lie on x^3 + y^3 - z^3
  CHECK(basis.size() == 2);
  const auto b6 = triangular(6, 7);
  const auto only = fit_curve(b6.net.all_points(), 3);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == CubicForm<Fp>(3, xyz));
}

TEST_CASE("conic-line nets") {
  const auto b = conic_line(3, 13, 1, 2);
  check_round_trip(b, cyclic(3));
  // (xz - y^2) y = xyz - y^3 vanishes on every point
  VectorX<Fp> f = VectorX<Fp>::Constant(10, Fp(0, 13));
  f(4) = Fp(1, 13);
  f(6) = Fp(-1, 13);
  const CubicForm<Fp> conic_line_cubic(3, f);
  for (const auto& p : b.net.all_points()) CHECK(conic_line_cubic(p).is_zero());
  CHECK(is_algebraic(b.net).has_value());

  check_round_trip(conic_line(4, 13), cyclic(4));  // default s2 = 2
  CHECK_THROWS_WITH_AS(conic_line(3, 13, 1, 3), doctest::Contains("CosetOverlap"), Error);
  CHECK_THROWS_WITH_AS(conic_line(12, 13), doctest::Contains("CosetOverlap"), Error);
}

TEST_CASE("elliptic nets") {
  SUBCASE("C2 x C6 as an index-3 subgroup of y^2 = x^3 + 1 over GF(31)") {
    const WeierstrassCurve c(0, 1, 31);
    CHECK(ec_group_structure(c) == std::vector<int>{6, 6});
    const auto b = elliptic_auto(c);
    CHECK(b.net.n == 12);
    check_round_trip(b, product(2, 6));
    for (const auto& p : b.net.all_points()) CHECK(c.contains(p));
  }
  SUBCASE("order-3 subgroup: nine points on the curve") {
    const WeierstrassCurve c(0, 1, 7);
    const auto pts = ec_points(c);
    std::optional<ProjPoint<Fp>> g3;
    for (const auto& p : pts)
      if (ec_order(c, p) == 3) {
        g3 = p;
        break;
      }
    REQUIRE(g3);
    // first shift pair (in point order) with three disjoint cosets
    std::optional<BuiltNet> b;
    for (const auto& c1 : pts) {
      for (const auto& c2 : pts) {
        try {
          b = elliptic(c, {*g3}, c1, c2);
        } catch (const Error& e) {
          CHECK(e.code() == Errc::CosetOverlap);
          continue;
        }
        break;
      }
      if (b) break;
    }
    REQUIRE(b);
    check_round_trip(*b, cyclic(3));
    const auto basis = fit_curve(b->net.all_points(), 3);
    REQUIRE_FALSE(basis.empty());
    CHECK(in_span(basis, c.form()));
  }
  SUBCASE("identical cosets are refused") {
    const WeierstrassCurve c(0, 1, 7);
    const auto o = c.infinity();
    const auto two_torsion = make_point<Fp>(Field{7}, 3, 0, 1);
    REQUIRE(c.contains(two_torsion));
    CHECK_THROWS_WITH_AS(elliptic(c, {two_torsion}, o, o), doctest::Contains("CosetOverlap"), Error);
    // the whole group has index 1 and cannot give three disjoint cosets
    CHECK_THROWS_WITH_AS(elliptic(c, ec_points(c), o, two_torsion), doctest::Contains("CosetOverlap"), Error);
  }
}

TEST_CASE("tetrahedron nets") {
  const auto d3 = tetrahedron(3, 19);
  check_round_trip(d3, dihedral(3));
  const auto d4 = tetrahedron(4, 29);
  check_round_trip(d4, dihedral(4));
  CHECK(d4.net.all_points().size() == 24);
  CHECK(fit_curve(d4.net.all_points(), 3).empty());
  CHECK_FALSE(is_algebraic(d4.net).has_value());

  // every point is on one of the six edges joining P, Q, R, S
  for (const auto& p : d4.net.all_points()) {
    const bool edge = p[0].is_zero() || p[1].is_zero() || p[2].is_zero() || p[0] == p[1] || p[1] == p[2] ||
                      p[0] == p[2];
    CHECK(edge);
  }

  // beta0 a d-th root of unity puts (0:1:1) into both halves of the first component
  CHECK_THROWS_WITH_AS(tetrahedron(3, 19, 7), doctest::Contains("NoValidBeta"), Error);  // 7^3 = 343 = 1 mod 19
  CHECK_THROWS_WITH_AS(tetrahedron(3, 7), doctest::Contains("NoValidBeta"), Error);
  CHECK_THROWS_WITH_AS(tetrahedron(3, 7, 3), doctest::Contains("NoValidBeta"), Error);
  CHECK_THROWS_WITH_AS(tetrahedron(2, 7), doctest::Contains("DOrderTooSmall"), Error);
  CHECK_THROWS_WITH_AS(tetrahedron(5, 7), doctest::Contains("NoSuchRoots"), Error);
}

TEST_CASE("tetrahedron auto-selection is the first verified residue") {
  const auto b = tetrahedron(3, 19);
  // the accepted beta is recoverable from the first coset point (1 - beta : 1 : 1)
  const auto& h = b.net.alpha(3);
  REQUIRE(h[1] == h[2]);
  const Fp beta = Fp(1, 19) - h[0] / h[1];
  for (std::int64_t t = 1; t < beta.value(); ++t) {
    const Fp cand(t, 19);
    if (cand.pow(3) == Fp(1, 19)) continue;
    CHECK_THROWS_AS(tetrahedron(3, 19, t), Error);
  }
  CHECK(tetrahedron(3, 19, beta.value()).net == b.net);
}

TEST_CASE("pencil nets") {
  check_round_trip(pencil(2), cyclic(2));
  const auto b = pencil(5);
  check_round_trip(b, cyclic(5));
  // the three lines x = 0, x = y, y = 0 all pass through (0:0:1)
  for (const auto& p : b.net.all_points()) CHECK((p[0].is_zero() || p[1].is_zero() || p[0] == p[1]));
  CHECK_THROWS_WITH_AS(pencil(5, 4), doctest::Contains("UnsupportedPencil"), Error);
  CHECK_THROWS_WITH_AS(pencil(7, 3), doctest::Contains("UnsupportedPencil"), Error);
  CHECK_NOTHROW(pencil(7, 7));
}

TEST_CASE("builder outputs survive projective substitutions") {
  std::vector<BuiltNet> nets = {triangular(4, 13), conic_line(3, 13), tetrahedron(3, 19), pencil(5),
                                elliptic_auto(WeierstrassCurve(0, 1, 13))};
  for (const auto& b : nets) {
    const auto m = testutil::random_invertible(b.net.field.p);
    const auto moved = transform(b.net, m);
    CHECK(verify(moved, true, &b.loop).pass);
    CHECK(is_isomorphic(recover_loop(moved), b.loop));
    CHECK(fit_curve(moved.all_points(), 3).size() == fit_curve(b.net.all_points(), 3).size());
  }
}
