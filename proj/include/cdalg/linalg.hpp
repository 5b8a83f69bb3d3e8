#ifndef CDALG_LINALG_HPP
#define CDALG_LINALG_HPP

#include "cdalg/scalar.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace cdalg {

/// Reduced row echelon form over an exact field.
template <typename Scalar>
struct RowEchelon {
  LinOp<Scalar> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename Scalar>
RowEchelon<Scalar> row_echelon(LinOp<Scalar> m) {
  static_assert(is_exact_v<Scalar>, "row_echelon requires exact scalars");
  RowEchelon<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));
    const Scalar p = m(row, col);
    m.row(row) /= p;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

/// Basis of the kernel from an RREF, one vector per free column.
template <typename Scalar>
std::vector<Coeffs<Scalar>> kernel_basis(const RowEchelon<Scalar>& rref) {
  const Eigen::Index n = rref.reduced.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : rref.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Coeffs<Scalar>> basis;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Coeffs<Scalar> v = Coeffs<Scalar>::Zero(n);
    v[free] = 1;
    for (Eigen::Index r = 0; r < rref.rank(); ++r) {
      v[rref.pivots[static_cast<std::size_t>(r)]] = -rref.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Square-matrix singularity: exact rank deficiency, or smallest singular
/// value <= tol * largest singular value.
template <typename Scalar>
bool is_singular(const LinOp<Scalar>& m, double tol) {
  if constexpr (is_exact_v<Scalar>) {
    return row_echelon<Scalar>(m).rank() < m.cols();
  } else {
    Eigen::JacobiSVD<LinOp<double>> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() < m.cols()) return true;
    return sv[sv.size() - 1] <= tol * sv[0];
  }
}

/// Smallest singular value relative to the largest (float mode diagnostics).
inline double relative_smallest_singular_value(const LinOp<double>& m) {
  Eigen::JacobiSVD<LinOp<double>> svd(m);
  const auto& sv = svd.singularValues();
  if (sv[0] == 0.0) return 0.0;
  return sv[sv.size() - 1] / sv[0];
}

/// A nonzero kernel vector when the matrix is singular: the first exact kernel
/// basis vector, or the right singular vector of the smallest singular value.
template <typename Scalar>
std::optional<Coeffs<Scalar>> kernel_vector(const LinOp<Scalar>& m, double tol) {
  if constexpr (is_exact_v<Scalar>) {
    auto basis = kernel_basis(row_echelon<Scalar>(m));
    if (basis.empty()) return std::nullopt;
    return basis.front();
  } else {
    Eigen::JacobiSVD<LinOp<double>> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const Eigen::Index last = m.cols() - 1;
    const double smallest = sv.size() == m.cols() ? sv[last] : 0.0;
    if (smallest > tol * sv[0]) return std::nullopt;
    return Coeffs<double>(svd.matrixV().col(last));
  }
}

/// Solves m x = rhs. Returns nullopt when the system is inconsistent: exact rank
/// comparison, or residual > tol * (1 + |rhs|) for floats.
template <typename Scalar>
std::optional<Coeffs<Scalar>> solve_linear(const LinOp<Scalar>& m, const Coeffs<Scalar>& rhs,
                                           double tol) {
  if constexpr (is_exact_v<Scalar>) {
    LinOp<Scalar> aug(m.rows(), m.cols() + 1);
    aug << m, rhs;
    auto rref = row_echelon<Scalar>(aug);
    if (!rref.pivots.empty() && rref.pivots.back() == m.cols()) return std::nullopt;
    Coeffs<Scalar> x = Coeffs<Scalar>::Zero(m.cols());
    for (Eigen::Index r = 0; r < rref.rank(); ++r) {
      x[rref.pivots[static_cast<std::size_t>(r)]] = rref.reduced(r, m.cols());
    }
    return x;
  } else {
    Coeffs<double> x = m.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
    if ((m * x - rhs).norm() > tol * (1.0 + rhs.norm())) return std::nullopt;
    return x;
  }
}

}  // namespace cdalg

#endif  // CDALG_LINALG_HPP
