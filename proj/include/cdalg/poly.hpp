#ifndef CDALG_POLY_HPP
#define CDALG_POLY_HPP

#include "cdalg/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cdalg {

/// One-sided polynomial c_0 + c_1 x + ... + c_n x^n over a Cayley-Dickson
/// algebra, with x central. Coefficients are stored densely, constant term
/// first, and trailing exact zeros are always trimmed.
template <typename Scalar>
class Poly {
 public:
  explicit Poly(Algebra<Scalar> algebra) : algebra_(std::move(algebra)) {}

  Poly(Algebra<Scalar> algebra, std::vector<Element<Scalar>> coeffs)
      : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
      if (c.algebra() != algebra_) throw std::invalid_argument("algebra mismatch");
    }
    trim();
  }

  /// x - lambda
  static Poly linear(const Element<Scalar>& lambda) {
    return Poly(lambda.algebra(), {-lambda, lambda.algebra().one()});
  }

  const Algebra<Scalar>& algebra() const { return algebra_; }
  const std::vector<Element<Scalar>>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of x^k (zero beyond the degree).
  Element<Scalar> coeff(int k) const {
    if (k < 0 || k > degree()) return algebra_.zero();
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const Element<Scalar>& leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  void check_same(const Poly& other) const {
    if (algebra_ != other.algebra_) throw std::invalid_argument("algebra mismatch");
  }

  friend bool operator==(const Poly& f, const Poly& g) {
    return f.algebra_ == g.algebra_ && f.coeffs_ == g.coeffs_;
  }
  friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  Algebra<Scalar> algebra_;
  std::vector<Element<Scalar>> coeffs_;
};

/// Polynomial with base-field coefficients, constant term first.
template <typename Scalar>
struct ScalarPoly {
  Coeffs<Scalar> coeffs;

  int degree() const {
    for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k) {
      if (coeffs[k] != 0) return static_cast<int>(k);
    }
    return -1;
  }
};

template <typename Scalar>
Element<Scalar> eval(const Poly<Scalar>& f, const Element<Scalar>& lambda) {
  if (f.algebra() != lambda.algebra()) throw std::invalid_argument("algebra mismatch");
  Element<Scalar> sum = f.algebra().zero();
  Element<Scalar> power = f.algebra().one();
  for (int k = 0; k <= f.degree(); ++k) {
    if (k > 0) power = mul(lambda, power);
    sum += mul(f.coeff(k), power);
  }
  return sum;
}

template <typename Scalar>
Poly<Scalar> add(const Poly<Scalar>& f, const Poly<Scalar>& g) {
  f.check_same(g);
  const int n = std::max(f.degree(), g.degree());
  std::vector<Element<Scalar>> c;
  for (int k = 0; k <= n; ++k) c.push_back(f.coeff(k) + g.coeff(k));
  return Poly<Scalar>(f.algebra(), std::move(c));
}

template <typename Scalar>
Poly<Scalar> sub(const Poly<Scalar>& f, const Poly<Scalar>& g) {
  f.check_same(g);
  const int n = std::max(f.degree(), g.degree());
  std::vector<Element<Scalar>> c;
  for (int k = 0; k <= n; ++k) c.push_back(f.coeff(k) - g.coeff(k));
  return Poly<Scalar>(f.algebra(), std::move(c));
}

/// Convolution with f's coefficients kept on the left: (fg)_k = sum f_i g_j.
/// The degree drops when zero divisors annihilate the leading terms.
template <typename Scalar>
Poly<Scalar> mul_poly(const Poly<Scalar>& f, const Poly<Scalar>& g) {
  f.check_same(g);
  if (f.is_zero() || g.is_zero()) return Poly<Scalar>(f.algebra());
  std::vector<Element<Scalar>> c(static_cast<std::size_t>(f.degree() + g.degree() + 1),
                                 f.algebra().zero());
  for (int i = 0; i <= f.degree(); ++i) {
    for (int j = 0; j <= g.degree(); ++j) {
      c[static_cast<std::size_t>(i + j)] += mul(f.coeff(i), g.coeff(j));
    }
  }
  return Poly<Scalar>(f.algebra(), std::move(c));
}

/// c * f(x), coefficientwise left multiplication.
template <typename Scalar>
Poly<Scalar> left_scale(const Element<Scalar>& c, const Poly<Scalar>& f) {
  if (c.algebra() != f.algebra()) throw std::invalid_argument("algebra mismatch");
  std::vector<Element<Scalar>> out;
  for (const auto& a : f.coeffs()) out.push_back(mul(c, a));
  return Poly<Scalar>(f.algebra(), std::move(out));
}

template <typename Scalar>
Poly<Scalar> scale(const Scalar& s, const Poly<Scalar>& f) {
  std::vector<Element<Scalar>> out;
  for (const auto& a : f.coeffs()) out.push_back(s * a);
  return Poly<Scalar>(f.algebra(), std::move(out));
}

template <typename Scalar>
Poly<Scalar> conj_poly(const Poly<Scalar>& f) {
  std::vector<Element<Scalar>> out;
  for (const auto& a : f.coeffs()) out.push_back(conj(a));
  return Poly<Scalar>(f.algebra(), std::move(out));
}

/// C_f = f * conj(f), certified to have base-field coefficients.
///
/// Coefficient k is sum_{i+j=k} c_i conj(c_j); terms pair up into traces, so
/// the nonscalar part must vanish exactly (rationals) or stay below
/// tol * (1 + max |coefficient|) (floats). A violation is an internal error.
template <typename Scalar>
ScalarPoly<Scalar> companion(const Poly<Scalar>& f) {
  if (f.is_zero()) throw std::domain_error("companion of the zero polynomial");
  const Poly<Scalar> product = mul_poly(f, conj_poly(f));
  const double tol = f.algebra().tol();
  double scale = 0.0;
  for (const auto& c : product.coeffs()) scale = std::max(scale, max_abs(c));
  ScalarPoly<Scalar> out{Coeffs<Scalar>::Zero(product.degree() + 1)};
  for (int k = 0; k <= product.degree(); ++k) {
    const auto& c = product.coeff(k);
    const Coeffs<Scalar> imag = c.coords().tail(c.dim() - 1);
    bool scalar_ok = false;
    if constexpr (is_exact_v<Scalar>) {
      scalar_ok = imag.isZero();
    } else {
      scalar_ok = imag.size() == 0 || imag.cwiseAbs().maxCoeff() <= tol * (1.0 + scale);
    }
    if (!scalar_ok) throw std::logic_error("companion polynomial has a nonscalar coefficient");
    out.coeffs[k] = c.real();
  }
  return out;
}

template <typename Scalar>
struct LinearDivision {
  Poly<Scalar> quotient;
  Element<Scalar> remainder;
};

/// Synthetic division f = g (x - lambda) + r with g_{n-1} = c_n,
/// g_{i-1} = c_i + g_i lambda, r = c_0 + g_0 lambda. r need not equal
/// f(lambda) once zero divisors are present.
template <typename Scalar>
LinearDivision<Scalar> right_divide_linear(const Poly<Scalar>& f, const Element<Scalar>& lambda) {
  if (f.algebra() != lambda.algebra()) throw std::invalid_argument("algebra mismatch");
  if (f.degree() < 1) throw std::domain_error("right_divide_linear needs degree >= 1");
  const int n = f.degree();
  std::vector<Element<Scalar>> g(static_cast<std::size_t>(n), f.algebra().zero());
  g[static_cast<std::size_t>(n - 1)] = f.coeff(n);
  for (int i = n - 1; i >= 1; --i) {
    g[static_cast<std::size_t>(i - 1)] = f.coeff(i) + mul(g[static_cast<std::size_t>(i)], lambda);
  }
  Element<Scalar> r = f.coeff(0) + mul(g[0], lambda);
  return {Poly<Scalar>(f.algebra(), std::move(g)), std::move(r)};
}

template <typename Scalar>
struct QuadraticDivision {
  Poly<Scalar> quotient;
  Element<Scalar> a;  // remainder a x + b
  Element<Scalar> b;
};

/// f = q (x^2 - t x + n) + a x + b. On the sphere lambda^2 - t lambda + n = 0
/// this gives f(lambda) = a lambda + b.
template <typename Scalar>
QuadraticDivision<Scalar> divide_central_quadratic(const Poly<Scalar>& f, const Scalar& t,
                                                   const Scalar& n) {
  const auto& algebra = f.algebra();
  std::vector<Element<Scalar>> rem(f.coeffs());
  const int deg = f.degree();
  if (deg < 2) {
    return {Poly<Scalar>(algebra), f.coeff(1), f.coeff(0)};
  }
  std::vector<Element<Scalar>> q(static_cast<std::size_t>(deg - 1), algebra.zero());
  for (int k = deg; k >= 2; --k) {
    const Element<Scalar> lead = rem[static_cast<std::size_t>(k)];
    q[static_cast<std::size_t>(k - 2)] = lead;
    rem[static_cast<std::size_t>(k)] = algebra.zero();
    rem[static_cast<std::size_t>(k - 1)] += t * lead;
    rem[static_cast<std::size_t>(k - 2)] -= n * lead;
  }
  return {Poly<Scalar>(algebra, std::move(q)), rem[1], rem[0]};
}

/// x^2 - t x + n as a polynomial over the algebra.
template <typename Scalar>
Poly<Scalar> central_quadratic(const Algebra<Scalar>& algebra, const Scalar& t, const Scalar& n) {
  return Poly<Scalar>(algebra, {algebra.scalar(n), algebra.scalar(-t), algebra.one()});
}

template <typename Scalar>
Poly<Scalar> derivative(const Poly<Scalar>& f) {
  std::vector<Element<Scalar>> out;
  for (int k = 1; k <= f.degree(); ++k) out.push_back(Scalar(k) * f.coeff(k));
  return Poly<Scalar>(f.algebra(), std::move(out));
}

/// Largest coordinate difference between the coefficient lists.
template <typename Scalar>
double coeff_distance(const Poly<Scalar>& f, const Poly<Scalar>& g) {
  f.check_same(g);
  double d = 0.0;
  for (int k = 0; k <= std::max(f.degree(), g.degree()); ++k) {
    d = std::max(d, max_abs(f.coeff(k) - g.coeff(k)));
  }
  return d;
}

template <typename Scalar>
double max_coeff_abs(const Poly<Scalar>& f) {
  double m = 0.0;
  for (const auto& c : f.coeffs()) m = std::max(m, max_abs(c));
  return m;
}

template <typename Scalar, typename Rng>
Poly<Scalar> random_poly(const Algebra<Scalar>& algebra, int degree, Rng& rng) {
  std::vector<Element<Scalar>> c;
  for (int k = 0; k < degree; ++k) c.push_back(random_element(algebra, rng));
  c.push_back(random_nonzero_element(algebra, rng));
  return Poly<Scalar>(algebra, std::move(c));
}

}  // namespace cdalg

#endif  // CDALG_POLY_HPP
