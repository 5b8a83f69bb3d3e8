#ifndef CDALG_EIGEN_LMR_HPP
#define CDALG_EIGEN_LMR_HPP

#include "cdalg/algebra.hpp"
#include "cdalg/linalg.hpp"
#include "cdalg/operators.hpp"
#include "cdalg/poly.hpp"

#include <array>
#include <optional>
#include <vector>

namespace cdalg {

/// [[a, b], [c, d]] over one algebra.
template <typename Scalar>
struct Matrix2 {
  Element<Scalar> a, b, c, d;

  const Algebra<Scalar>& algebra() const { return a.algebra(); }

  void check() const {
    if (b.algebra() != a.algebra() || c.algebra() != a.algebra() || d.algebra() != a.algebra()) {
      throw std::invalid_argument("matrix entries from different algebras");
    }
  }

  static Matrix2 identity(const Algebra<Scalar>& algebra) {
    return {algebra.one(), algebra.zero(), algebra.zero(), algebra.one()};
  }

  friend bool operator==(const Matrix2& x, const Matrix2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

template <typename Scalar>
using Vec2 = std::array<Element<Scalar>, 2>;

template <typename Scalar>
struct EigenPair {
  Element<Scalar> lambda;
  Vec2<Scalar> v;
};

/// Square matrix of elements, row-major; used for the triangular case.
template <typename Scalar>
struct SquareMatrix {
  int size = 0;
  std::vector<Element<Scalar>> entries;

  const Element<Scalar>& operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i * size + j)];
  }
};

/// (B v)_i = sum_j B_ij v_j
template <typename Scalar>
Vec2<Scalar> matvec(const Matrix2<Scalar>& m, const Vec2<Scalar>& v) {
  return {mul(m.a, v[0]) + mul(m.b, v[1]), mul(m.c, v[0]) + mul(m.d, v[1])};
}

template <typename Scalar>
Matrix2<Scalar> matmul(const Matrix2<Scalar>& x, const Matrix2<Scalar>& y) {
  return {mul(x.a, y.a) + mul(x.b, y.c), mul(x.a, y.b) + mul(x.b, y.d),
          mul(x.c, y.a) + mul(x.d, y.c), mul(x.c, y.b) + mul(x.d, y.d)};
}

/// e B, entrywise left multiplication.
template <typename Scalar>
Matrix2<Scalar> left_scale(const Element<Scalar>& e, const Matrix2<Scalar>& m) {
  return {mul(e, m.a), mul(e, m.b), mul(e, m.c), mul(e, m.d)};
}

/// v e, componentwise right multiplication.
template <typename Scalar>
Vec2<Scalar> right_scale(const Vec2<Scalar>& v, const Element<Scalar>& e) {
  return {mul(v[0], e), mul(v[1], e)};
}

template <typename Scalar>
Matrix2<Scalar> embed(const Matrix2<Scalar>& m, const Algebra<Scalar>& target) {
  return {embed(m.a, target), embed(m.b, target), embed(m.c, target), embed(m.d, target)};
}

template <typename Scalar>
double max_abs(const Matrix2<Scalar>& m) {
  return std::max({max_abs(m.a), max_abs(m.b), max_abs(m.c), max_abs(m.d)});
}

/// Residual max-coordinate of B v - lambda v.
template <typename Scalar>
double eigen_residual(const Matrix2<Scalar>& m, const Element<Scalar>& lambda,
                      const Vec2<Scalar>& v) {
  const auto bv = matvec(m, v);
  return std::max(max_abs(bv[0] - mul(lambda, v[0])), max_abs(bv[1] - mul(lambda, v[1])));
}

/// B v = lambda v, exactly in rational mode; otherwise with residual
/// <= tol * (1 + max|B| + max|lambda|) * max|v|.
template <typename Scalar>
bool verify_eigenpair(const Matrix2<Scalar>& m, const Element<Scalar>& lambda,
                      const Vec2<Scalar>& v) {
  if (v[0].is_zero() && v[1].is_zero()) throw std::invalid_argument("eigenvector must be nonzero");
  const double residual = eigen_residual(m, lambda, v);
  if constexpr (is_exact_v<Scalar>) {
    return residual == 0.0 && matvec(m, v)[0] == mul(lambda, v[0]) &&
           matvec(m, v)[1] == mul(lambda, v[1]);
  } else {
    const double scale =
        (1.0 + max_abs(m) + max_abs(lambda)) * std::max(max_abs(v[0]), max_abs(v[1]));
    return residual <= m.algebra().tol() * scale;
  }
}

/// Block matrix [[L_{a-l}, L_b], [L_c, L_{d-l}]] of v -> (B - lambda I) v.
template <typename Scalar>
LinOp<Scalar> shifted_block_operator(const Matrix2<Scalar>& m, const Element<Scalar>& lambda) {
  const Eigen::Index n = m.algebra().dim();
  LinOp<Scalar> op(2 * n, 2 * n);
  op.topLeftCorner(n, n) = left_mul_op(m.a - lambda);
  op.topRightCorner(n, n) = left_mul_op(m.b);
  op.bottomLeftCorner(n, n) = left_mul_op(m.c);
  op.bottomRightCorner(n, n) = left_mul_op(m.d - lambda);
  return op;
}

/// Ground truth: lambda is a left eigenvalue iff B - lambda I is singular on
/// A^2 viewed as a vector space over the base field.
template <typename Scalar>
bool spectrum_oracle(const Matrix2<Scalar>& m, const Element<Scalar>& lambda, double tol) {
  m.check();
  return is_singular<Scalar>(shifted_block_operator(m, lambda), tol);
}

template <typename Scalar>
bool spectrum_oracle(const Matrix2<Scalar>& m, const Element<Scalar>& lambda) {
  return spectrum_oracle(m, lambda, m.algebra().tol());
}

namespace detail {

template <typename Scalar>
bool negligible(const Element<Scalar>& x) {
  if constexpr (is_exact_v<Scalar>) {
    return x.is_zero();
  } else {
    return max_abs(x) <= x.algebra().tol();
  }
}

}  // namespace detail

/// Spectrum of a triangular matrix over a division Cayley-Dickson algebra:
/// the distinct diagonal entries, each with a certifying eigenvector (found by
/// substitution; it is e_i when the off-diagonal part of column i vanishes).
template <typename Scalar>
std::vector<std::pair<Element<Scalar>, std::vector<Element<Scalar>>>> triangular_spectrum(
    const SquareMatrix<Scalar>& m) {
  const int n = m.size;
  if (n < 1 || static_cast<int>(m.entries.size()) != n * n) {
    throw std::invalid_argument("malformed square matrix");
  }
  bool lower = true, upper = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > i && !detail::negligible(m(i, j))) lower = false;
      if (j < i && !detail::negligible(m(i, j))) upper = false;
    }
  }
  if (!lower && !upper) throw std::invalid_argument("matrix is not triangular");
  lower = lower && !upper;  // diagonal input takes the upper branch, giving e_i
  const auto& algebra = m(0, 0).algebra();

  std::vector<std::pair<Element<Scalar>, std::vector<Element<Scalar>>>> out;
  for (int i = 0; i < n; ++i) {
    const auto& value = m(i, i);
    bool seen = false;
    for (const auto& entry : out) seen = seen || approx_equal(entry.first, value, algebra.tol());
    if (seen) continue;

    // Pick the pivot row p so that every later (lower) or earlier (upper)
    // diagonal entry differs from value, then substitute outwards.
    std::vector<Element<Scalar>> v(static_cast<std::size_t>(n), algebra.zero());
    int p = i;
    for (int k = 0; k < n; ++k) {
      if (!approx_equal(m(k, k), value, algebra.tol())) continue;
      if (lower ? k > p : k < p) p = k;
    }
    v[static_cast<std::size_t>(p)] = algebra.one();
    const int step = lower ? 1 : -1;
    for (int j = p + step; j >= 0 && j < n; j += step) {
      Element<Scalar> rhs = algebra.zero();
      for (int k = p; k != j; k += step) rhs -= mul(m(j, k), v[static_cast<std::size_t>(k)]);
      v[static_cast<std::size_t>(j)] = mul(inverse(m(j, j) - value), rhs);
    }
    out.emplace_back(value, std::move(v));
  }
  return out;
}

/// (e lambda, v e) for the matrix e B. Needs a division algebra with the
/// Moufang identities.
template <typename Scalar>
EigenPair<Scalar> shift_eigenpair(const Element<Scalar>& e, const EigenPair<Scalar>& pair) {
  if (e.is_zero()) throw std::invalid_argument("shift_eigenpair needs a nonzero element");
  return {mul(e, pair.lambda), right_scale(pair.v, e)};
}

/// f(x) = b x^2 + (a - d) x - c.
template <typename Scalar>
Poly<Scalar> associated_quadratic(const Matrix2<Scalar>& m) {
  return Poly<Scalar>(m.algebra(), {-m.c, m.a - m.d, m.b});
}

template <typename Scalar>
struct LmrResult {
  bool member = false;
  std::optional<Element<Scalar>> witness;  // u with (u c2) s^2 + (u c1) s + u c0 = 0
  double smallest_singular_value = 0.0;    // relative; float mode only
};

/// Matrix of u -> (u c2) s^2 + (u c1) s + u c0, i.e.
/// R_{s^2} R_{c2} + R_s R_{c1} + R_{c0}.
template <typename Scalar>
LinOp<Scalar> lmr_operator(const Poly<Scalar>& f, const Element<Scalar>& s) {
  if (f.degree() != 2) throw std::invalid_argument("lmr_member needs a quadratic polynomial");
  return right_mul_op(mul(s, s)) * right_mul_op(f.coeff(2)) +
         right_mul_op(s) * right_mul_op(f.coeff(1)) + right_mul_op(f.coeff(0));
}

/// s belongs to LMR(f), the union of the root sets of u f over nonzero u,
/// iff the operator above is singular; the kernel vector is the multiplier u.
template <typename Scalar>
LmrResult<Scalar> lmr_member(const Poly<Scalar>& f, const Element<Scalar>& s) {
  const auto& algebra = f.algebra();
  if (algebra.dim() > 8) throw std::domain_error("LMR is only computed over division algebras");
  const auto op = lmr_operator(f, s);
  LmrResult<Scalar> out;
  if constexpr (!is_exact_v<Scalar>) out.smallest_singular_value = relative_smallest_singular_value(op);
  if (auto u = kernel_vector<Scalar>(op, algebra.tol())) {
    out.member = true;
    out.witness = Element<Scalar>(algebra, std::move(*u));
  }
  return out;
}

template <typename Scalar>
struct ZeroSpectrum {
  bool member = false;
  std::optional<Element<Scalar>> witness;  // nonzero t with d^{-1}(c t) = b^{-1}(a t)
};

/// Whether 0 is a left eigenvalue, for b != 0: if d = 0 exactly when c = 0,
/// else iff t -> d^{-1}(c t) - b^{-1}(a t) has a kernel.
template <typename Scalar>
ZeroSpectrum<Scalar> zero_in_spectrum(const Matrix2<Scalar>& m) {
  m.check();
  if (detail::negligible(m.b)) throw std::domain_error("zero_in_spectrum needs b != 0");
  ZeroSpectrum<Scalar> out;
  if (detail::negligible(m.d)) {
    out.member = detail::negligible(m.c);
    return out;
  }
  const LinOp<Scalar> op = left_mul_op(inverse(m.d)) * left_mul_op(m.c) -
                           left_mul_op(inverse(m.b)) * left_mul_op(m.a);
  if (auto t = kernel_vector<Scalar>(op, m.algebra().tol())) {
    out.member = true;
    out.witness = Element<Scalar>(m.algebra(), std::move(*t));
  }
  return out;
}

/// Two-sided inverse over an associative division algebra (dimension <= 4)
/// by block elimination with a row swap when a = 0. nullopt when singular.
template <typename Scalar>
std::optional<Matrix2<Scalar>> invert_h_matrix(const Matrix2<Scalar>& m) {
  m.check();
  if (m.algebra().dim() > 4) throw std::domain_error("invert_h_matrix needs an associative algebra");
  auto invert_pivoted = [](const Matrix2<Scalar>& x) -> std::optional<Matrix2<Scalar>> {
    const auto ai = inverse(x.a);
    const auto schur = x.d - mul(mul(x.c, ai), x.b);
    if (detail::negligible(schur)) return std::nullopt;
    const auto si = inverse(schur);
    const auto ai_b = mul(ai, x.b);
    const auto c_ai = mul(x.c, ai);
    return Matrix2<Scalar>{ai + mul(mul(ai_b, si), c_ai), -mul(ai_b, si), -mul(si, c_ai), si};
  };
  if (!detail::negligible(m.a)) return invert_pivoted(m);
  if (detail::negligible(m.c)) return std::nullopt;
  // B = P B' with rows swapped, so B^{-1} = B'^{-1} P (columns swapped).
  auto swapped = invert_pivoted({m.c, m.d, m.a, m.b});
  if (!swapped) return std::nullopt;
  return Matrix2<Scalar>{swapped->b, swapped->a, swapped->d, swapped->c};
}

// ---------------------------------------------------------------------------
// Numeric spectrum operations (float mode, octonions or quaternions).

/// Eigenpairs (a + t((t^{-1} b) s), (t, s t)) over the roots s of t^{-1} f.
/// Spherical root classes contribute `sphere_samples` deterministic points.
std::vector<EigenPair<double>> eig_from_t(const Matrix2<double>& m, const Element<double>& t,
                                          int sphere_samples = 4);

/// One left eigenpair: (a, (1, (a - d)^{-1} c)) when b = 0 (or (d, e_2) if a = d),
/// else from a root s of f with t = 1.
EigenPair<double> eig_exists(const Matrix2<double>& m);

/// For scalar b: lambda is a left eigenvalue iff b^{-1}(lambda - a) lies in LMR(f).
LmrResult<double> lmr_spectrum_member(const Matrix2<double>& m, const Element<double>& lambda);

/// Approximate spectrum: eigenpairs from eig_from_t over `samples`
/// deterministic unit multipliers t (Halton points on the unit sphere, offset by
/// `seed`), deduplicated by eigenvalue within 10 tol.
std::vector<EigenPair<double>> sample_spectrum(const Matrix2<double>& m, int samples = 256,
                                               std::uint64_t seed = 0);

/// Left spectrum over an associative division algebra: {a, d} when b = 0,
/// otherwise a + b s over the roots s of f. Spherical root classes give
/// families {a + b s : s on the sphere (t, n)}.
struct AssocSpectrum {
  std::vector<Element<double>> points;
  struct Family {
    double t, n;
  };
  std::vector<Family> families;
  Element<double> a, b;

  /// Deterministic eigenvalues from one family.
  std::vector<Element<double>> family_samples(const Family& family, int count = 8) const;
};

AssocSpectrum assoc_eig2x2(const Matrix2<double>& m);

}  // namespace cdalg

#endif  // CDALG_EIGEN_LMR_HPP
