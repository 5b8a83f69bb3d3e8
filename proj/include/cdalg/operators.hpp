#ifndef CDALG_OPERATORS_HPP
#define CDALG_OPERATORS_HPP

#include "cdalg/algebra.hpp"
#include "cdalg/linalg.hpp"

#include <optional>

namespace cdalg {

/// Matrix of x -> a x on coordinate vectors.
template <typename Scalar>
LinOp<Scalar> left_mul_op(const Element<Scalar>& a) {
  const auto& algebra = a.algebra();
  const Eigen::Index n = algebra.dim();
  LinOp<Scalar> m = LinOp<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (Eigen::Index j = 0; j < n; ++j) m(i ^ j, j) += algebra.structure(i, j) * a[i];
  }
  return m;
}

/// Matrix of x -> x a on coordinate vectors.
template <typename Scalar>
LinOp<Scalar> right_mul_op(const Element<Scalar>& a) {
  const auto& algebra = a.algebra();
  const Eigen::Index n = algebra.dim();
  LinOp<Scalar> m = LinOp<Scalar>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (a[j] == 0) continue;
    for (Eigen::Index i = 0; i < n; ++i) m(i ^ j, i) += algebra.structure(i, j) * a[j];
  }
  return m;
}

template <typename Scalar>
Element<Scalar> apply(const LinOp<Scalar>& op, const Element<Scalar>& x) {
  return Element<Scalar>(x.algebra(), op * x.coords());
}

/// True iff left multiplication by x is singular.
template <typename Scalar>
bool is_zero_divisor(const Element<Scalar>& x) {
  if (x.is_zero()) throw std::invalid_argument("zero is excluded from the zero-divisor test");
  return is_singular<Scalar>(left_mul_op(x), x.algebra().tol());
}

/// Some x with a x = b, or nullopt when b is outside the image of L_a.
template <typename Scalar>
std::optional<Element<Scalar>> solve_left(const Element<Scalar>& a, const Element<Scalar>& b) {
  a.check_same(b);
  if (a.is_zero()) throw std::invalid_argument("solve_left requires a nonzero left factor");
  auto x = solve_linear<Scalar>(left_mul_op(a), b.coords(), a.algebra().tol());
  if (!x) return std::nullopt;
  return Element<Scalar>(a.algebra(), std::move(*x));
}

}  // namespace cdalg

#endif  // CDALG_OPERATORS_HPP
