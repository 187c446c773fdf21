#pragma once

#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "loopnet/field.hpp"

namespace loopnet {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

// Rows of a rational matrix rescaled to integer entries; the row space is unchanged.
template <typename Scalar>
void clear_denominators(MatrixX<Scalar>& m) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      BigInt l = 1;
      for (Eigen::Index j = 0; j < m.cols(); ++j) l = lcm_big(l, boost::multiprecision::denominator(m(i, j)));
      if (l != 1) m.row(i) *= Rational(l);
    }
  }
}

}  // namespace detail

/// Row echelon form by fraction-free (Bareiss) elimination with row pivoting.
/// Returns the pivot columns; `m` is overwritten with the echelon form.
template <typename Scalar>
std::vector<Eigen::Index> bareiss_echelon(MatrixX<Scalar>& m) {
  using Traits = FieldTraits<Scalar>;
  detail::clear_denominators(m);
  std::vector<Eigen::Index> pivots;
  Scalar prev(1);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pick = row;
    while (pick < m.rows() && Traits::is_zero(m(pick, col))) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row) m.row(pick).swap(m.row(row));
    const Scalar pivot = m(row, col);
    for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
      const Scalar lead = m(i, col);
      for (Eigen::Index j = col + 1; j < m.cols(); ++j) m(i, j) = (pivot * m(i, j) - lead * m(row, j)) / prev;
      m(i, col) = Scalar(0);
    }
    prev = pivot;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Reduced-row-echelon kernel basis of `m` (one vector per free column, that entry = 1).
template <typename Scalar>
std::vector<VectorX<Scalar>> kernel_basis(MatrixX<Scalar> m) {
  using Traits = FieldTraits<Scalar>;
  const auto pivots = bareiss_echelon(m);
  const auto rank = static_cast<Eigen::Index>(pivots.size());
  // Normalize pivots to 1 and clear above them.
  for (Eigen::Index k = rank - 1; k >= 0; --k) {
    const Eigen::Index pc = pivots[k];
    m.row(k) *= Traits::inverse(m(k, pc));
    for (Eigen::Index i = 0; i < k; ++i) {
      const Scalar factor = m(i, pc);
      if (!Traits::is_zero(factor)) m.row(i) -= factor * m.row(k);
    }
  }
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (auto pc : pivots) is_pivot[pc] = 1;
  std::vector<VectorX<Scalar>> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(m.cols());
    v(free) = Scalar(1);
    for (Eigen::Index k = 0; k < rank; ++k) v(pivots[k]) = -m(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename Scalar>
Eigen::Index rank(MatrixX<Scalar> m) {
  return static_cast<Eigen::Index>(bareiss_echelon(m).size());
}

}  // namespace loopnet
