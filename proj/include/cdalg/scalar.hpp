#ifndef CDALG_SCALAR_HPP
#define CDALG_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cmath>
#include <string>
#include <string_view>

namespace cdalg {

/// Exact base-field scalar. Expression templates are off so that Eigen sees a
/// plain value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using LinOp = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "f64";
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "rational";
};

template <typename Scalar>
inline constexpr bool is_exact_v = scalar_traits<Scalar>::exact;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

template <typename Scalar>
double abs_value(const Scalar& x) {
  return std::abs(to_double(x));
}

/// Exact zero test for rationals, |x| <= tol for floats.
template <typename Scalar>
bool is_negligible(const Scalar& x, double tol) {
  if constexpr (is_exact_v<Scalar>) {
    return x == 0;
  } else {
    return std::abs(x) <= tol;
  }
}

/// Parses an integer, a fraction `p/q`, or a decimal literal. Decimals are
/// converted exactly in rational mode.
template <typename Scalar>
Scalar parse_scalar(std::string_view text);

template <>
double parse_scalar<double>(std::string_view text);

template <>
Rational parse_scalar<Rational>(std::string_view text);

/// Canonical text for a scalar: `p`, `p/q` or the shortest round-tripping
/// decimal.
std::string format_scalar(double x);
std::string format_scalar(const Rational& x);

}  // namespace cdalg

#endif  // CDALG_SCALAR_HPP
