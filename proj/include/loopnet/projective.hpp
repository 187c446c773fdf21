#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "loopnet/error.hpp"
#include "loopnet/field.hpp"
#include "loopnet/linalg.hpp"

namespace loopnet {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

struct PointTag {};
struct LineTag {};

/// Homogeneous triple in canonical form: first nonzero coordinate scaled to 1.
/// ProjPoint and ProjLine share the representation; lines are coefficient vectors (a:b:c) of ax+by+cz.
template <typename Scalar, typename Tag>
class Homogeneous {
 public:
  using Traits = FieldTraits<Scalar>;

  Homogeneous() = default;
  explicit Homogeneous(const Vec3<Scalar>& v) : v_(v) { normalize(); }
  Homogeneous(Scalar x, Scalar y, Scalar z) : v_(std::move(x), std::move(y), std::move(z)) { normalize(); }

  const Vec3<Scalar>& coords() const noexcept { return v_; }
  const Scalar& operator[](int i) const { return v_(i); }
  Field field() const {
    for (int i = 0; i < 3; ++i)
      if (Traits::field_of(v_(i)).p) return Traits::field_of(v_(i));
    return Field{};
  }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) {
    return a.v_(0) == b.v_(0) && a.v_(1) == b.v_(1) && a.v_(2) == b.v_(2);
  }
  friend bool operator<(const Homogeneous& a, const Homogeneous& b) {
    for (int i = 0; i < 3; ++i) {
      if (a.v_(i) < b.v_(i)) return true;
      if (b.v_(i) < a.v_(i)) return false;
    }
    return false;
  }

  friend std::ostream& operator<<(std::ostream& os, const Homogeneous& h) {
    return os << '(' << Traits::to_string(h.v_(0)) << ':' << Traits::to_string(h.v_(1)) << ':'
              << Traits::to_string(h.v_(2)) << ')';
  }

 private:
  void normalize() {
    int lead = 0;
    while (lead < 3 && Traits::is_zero(v_(lead))) ++lead;
    if (lead == 3) throw Error(Errc::BadParameter, "homogeneous coordinates are all zero");
    const Field f = field();
    for (int i = 0; i < 3; ++i) v_(i) = Traits::bind(v_(i), f);
    if (v_(lead) != Scalar(1)) v_ *= Traits::inverse(v_(lead));
  }

  Vec3<Scalar> v_ = Vec3<Scalar>(Scalar(0), Scalar(0), Scalar(1));
};

template <typename Scalar>
using ProjPoint = Homogeneous<Scalar, PointTag>;
template <typename Scalar>
using ProjLine = Homogeneous<Scalar, LineTag>;

template <typename Scalar>
ProjPoint<Scalar> make_point(const Field& f, std::int64_t x, std::int64_t y, std::int64_t z) {
  using T = FieldTraits<Scalar>;
  return ProjPoint<Scalar>(T::from_int(x, f), T::from_int(y, f), T::from_int(z, f));
}

template <typename Scalar>
Scalar det3(const Vec3<Scalar>& a, const Vec3<Scalar>& b, const Vec3<Scalar>& c) {
  return a.dot(b.cross(c));
}

template <typename Scalar>
bool collinear(const ProjPoint<Scalar>& p, const ProjPoint<Scalar>& q, const ProjPoint<Scalar>& r) {
  return FieldTraits<Scalar>::is_zero(det3(p.coords(), q.coords(), r.coords()));
}

template <typename Scalar>
bool incident(const ProjPoint<Scalar>& p, const ProjLine<Scalar>& l) {
  return FieldTraits<Scalar>::is_zero(p.coords().dot(l.coords()));
}

template <typename Scalar>
ProjLine<Scalar> line_through(const ProjPoint<Scalar>& p, const ProjPoint<Scalar>& q) {
  if (p == q) throw Error(Errc::EqualInputs, "line through a point and itself");
  return ProjLine<Scalar>(p.coords().cross(q.coords()));
}

template <typename Scalar>
ProjPoint<Scalar> intersect(const ProjLine<Scalar>& l, const ProjLine<Scalar>& m) {
  if (l == m) throw Error(Errc::EqualInputs, "intersection of a line with itself");
  return ProjPoint<Scalar>(l.coords().cross(m.coords()));
}

/// Exponent triples (i, j, k) of x^i y^j z^k for the frozen monomial order.
inline const std::vector<std::array<int, 3>>& monomials(int degree) {
  static const std::vector<std::array<int, 3>> quadric = {
      {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  static const std::vector<std::array<int, 3>> cubic = {
      {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
      {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
  if (degree == 2) return quadric;
  if (degree == 3) return cubic;
  throw Error(Errc::BadParameter, "curve degree must be 2 or 3");
}

template <typename Scalar>
Scalar monomial_value(const Vec3<Scalar>& v, const std::array<int, 3>& e) {
  Scalar r(1);
  for (int axis = 0; axis < 3; ++axis)
    for (int k = 0; k < e[axis]; ++k) r = r * v(axis);
  return r;
}

/// Ternary form of degree 2 or 3 up to scalar; canonical with first nonzero coefficient 1.
template <typename Scalar>
class Form {
 public:
  using Traits = FieldTraits<Scalar>;

  Form(int degree, VectorX<Scalar> coeffs) : degree_(degree), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<Eigen::Index>(monomials(degree_).size()))
      throw Error(Errc::BadParameter, "coefficient count does not match degree");
    Eigen::Index lead = 0;
    while (lead < c_.size() && Traits::is_zero(c_(lead))) ++lead;
    if (lead == c_.size()) throw Error(Errc::BadParameter, "zero form");
    c_ *= Traits::inverse(c_(lead));
  }

  int degree() const noexcept { return degree_; }
  const VectorX<Scalar>& coeffs() const noexcept { return c_; }

  Scalar operator()(const ProjPoint<Scalar>& p) const {
    const auto& mons = monomials(degree_);
    Scalar r(0);
    for (std::size_t k = 0; k < mons.size(); ++k) r = r + c_(static_cast<Eigen::Index>(k)) * monomial_value(p.coords(), mons[k]);
    return r;
  }

  friend bool operator==(const Form& a, const Form& b) {
    if (a.degree_ != b.degree_) return false;
    for (Eigen::Index i = 0; i < a.c_.size(); ++i)
      if (!(a.c_(i) == b.c_(i))) return false;
    return true;
  }

 private:
  int degree_;
  VectorX<Scalar> c_;
};

template <typename Scalar>
using CubicForm = Form<Scalar>;

/// Basis of the degree-d forms vanishing on every point (exact kernel). Empty means no such curve.
template <typename Scalar>
std::vector<Form<Scalar>> fit_curve(const std::vector<ProjPoint<Scalar>>& points, int degree) {
  const auto& mons = monomials(degree);
  if (points.empty()) throw Error(Errc::BadParameter, "fit_curve needs at least one point");
  MatrixX<Scalar> m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(mons.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t k = 0; k < mons.size(); ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = monomial_value(points[i].coords(), mons[k]);
  std::vector<Form<Scalar>> basis;
  for (auto& v : kernel_basis(std::move(m))) basis.emplace_back(degree, std::move(v));
  return basis;
}

/// Least primitive d-th root of unity mod p, then its powers zeta^0 .. zeta^(d-1).
std::vector<Fp> roots_of_unity(int d, std::uint32_t p);

/// Every point of PG(2, p) in canonical order.
std::vector<ProjPoint<Fp>> plane_points(std::uint32_t p);

}  // namespace loopnet
