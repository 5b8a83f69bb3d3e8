#ifndef CDALG_IO_HPP
#define CDALG_IO_HPP

#include "cdalg/algebra.hpp"
#include "cdalg/eigen_lmr.hpp"
#include "cdalg/poly.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdalg {

using json = nlohmann::json;

/// Syntax error with the byte offset where parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Element text: signed terms `c*e<k>`, `e<k>` or a bare scalar joined by
/// `+`/`-`, e.g. `e1+e10` or `1/2*e7`. Scalars are integers, fractions `p/q`
/// or decimals.
template <typename Scalar>
Element<Scalar> parse_element(std::string_view text, const Algebra<Scalar>& algebra);

/// Canonical text; parse_element(format_element(x)) == x.
template <typename Scalar>
std::string format_element(const Element<Scalar>& x);

/// `;`-separated element literals, constant term first.
template <typename Scalar>
Poly<Scalar> parse_poly(std::string_view text, const Algebra<Scalar>& algebra);

template <typename Scalar>
std::string format_poly(const Poly<Scalar>& f);

template <typename Scalar>
std::string format_scalar_poly(const ScalarPoly<Scalar>& p);

/// Array of 2^m scalar strings.
template <typename Scalar>
json element_to_json(const Element<Scalar>& x);

/// Accepts the array form (strings or numbers) or element text.
template <typename Scalar>
Element<Scalar> element_from_json(const json& j, const Algebra<Scalar>& algebra);

template <typename Scalar>
json poly_to_json(const Poly<Scalar>& f);

template <typename Scalar>
Poly<Scalar> poly_from_json(const json& j, const Algebra<Scalar>& algebra);

/// {"a": ..., "b": ..., "c": ..., "d": ...} with entries in element form.
template <typename Scalar>
json matrix_to_json(const Matrix2<Scalar>& m);

template <typename Scalar>
Matrix2<Scalar> matrix_from_json(const json& j, const Algebra<Scalar>& algebra);

/// Algebra descriptor {"gammas": [...], "scalar": "rational"|"f64", "tol": number}.
struct AlgebraSpec {
  std::vector<std::string> gammas{"-1", "-1", "-1"};
  std::string scalar = "rational";
  double tol = 1e-9;
};

AlgebraSpec algebra_spec_from_json(const json& j);
json to_json(const AlgebraSpec& spec);

/// "-1,-1,-1" -> {"-1", "-1", "-1"}; the empty string is the base field.
std::vector<std::string> split_list(std::string_view text);

template <typename Scalar>
Algebra<Scalar> build_algebra(const AlgebraSpec& spec) {
  std::vector<Scalar> gammas;
  for (const auto& g : spec.gammas) gammas.push_back(parse_scalar<Scalar>(g));
  return Algebra<Scalar>(std::move(gammas), spec.tol);
}

}  // namespace cdalg

#endif  // CDALG_IO_HPP
