#include "cdalg/identities.hpp"
#include "cdalg/io.hpp"
#include "cdalg/operators.hpp"

#include "doctest.h"

#include <random>

using namespace cdalg;

namespace {

using Q = Rational;

Algebra<Q> quaternions() { return standard_algebra<Q>(2); }
Algebra<Q> octonions() { return standard_algebra<Q>(3); }
Algebra<Q> sedenions() { return standard_algebra<Q>(4); }

Element<Q> el(const Algebra<Q>& algebra, const char* text) { return parse_element(text, algebra); }

}  // namespace

TEST_CASE("dimension follows the number of doublings") {
  CHECK(make_algebra<Q>({}).dim() == 1);
  CHECK(make_algebra<Q>({-1, -1, -1}).dim() == 8);
  CHECK(make_algebra<Q>({-1, -1, -1, -1}).dim() == 16);
  CHECK_THROWS_AS(make_algebra<Q>({-1, 0}), std::invalid_argument);
}

TEST_CASE("basis products") {
  const auto h = quaternions();
  CHECK(mul(h.basis(1), h.basis(2)) == h.basis(3));
  CHECK(mul(h.basis(2), h.basis(1)) == -h.basis(3));
  const auto s = sedenions();
  CHECK(mul(el(s, "e1+e10"), el(s, "e7+e12")).is_zero());
  CHECK(mul(el(s, "e7+e12"), el(s, "e1+e10")).is_zero());
  std::mt19937_64 rng(3);
  const auto x = random_element(s, rng);
  CHECK(mul(s.one(), x) == x);
  CHECK(mul(x, s.one()) == x);
}

TEST_CASE("structure table matches the recursive doubling product") {
  for (const auto& algebra : {quaternions(), octonions(), sedenions(),
                              make_algebra<Q>({Q(-2), Q(3), Q(-1, 2)})}) {
    for (Eigen::Index i = 0; i < algebra.dim(); ++i) {
      for (Eigen::Index j = 0; j < algebra.dim(); ++j) {
        CHECK(mul(algebra.basis(i), algebra.basis(j)) ==
              mul_recursive(algebra.basis(i), algebra.basis(j)));
      }
    }
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_element(algebra, rng);
      const auto y = random_element(algebra, rng);
      CHECK(mul(x, y) == mul_recursive(x, y));
    }
  }
}

TEST_CASE("conjugation, trace and norm") {
  const auto s = sedenions();
  CHECK(conj(s.one()) == s.one());
  CHECK(conj(s.basis(1)) == -s.basis(1));
  CHECK(conj(el(s, "e1+e10")) == el(s, "-e1-e10"));
  const auto alpha = el(s, "e1+e10");
  const auto beta = el(s, "e7+e12");
  CHECK(norm(alpha) == 2);
  CHECK(norm(beta) == 2);
  CHECK(norm(mul(alpha, beta)) == 0);
  CHECK(trace(el(s, "3+e5")) == 6);
  CHECK(bilinear(beta, beta) == 2);
}

TEST_CASE("quadratic relation and trace/norm are scalar in every algebra") {
  for (const auto& algebra : {octonions(), sedenions(), make_algebra<Q>({Q(2), Q(-3), Q(5)})}) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = random_element(algebra, rng);
      CHECK((mul(x, conj(x))).is_scalar());
      CHECK((x + conj(x)).is_scalar());
      CHECK(mul(x, x) - trace(x) * x + norm(x) * algebra.one() == algebra.zero());
      CHECK(conj(conj(x)) == x);
    }
  }
}

TEST_CASE("bilinear form transfers multiplication") {
  const auto s = sedenions();
  const auto alpha = el(s, "e1+e10");
  const auto beta = el(s, "e7+e12");
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_element(s, rng);
    CHECK(bilinear(mul(alpha, x), beta) == -bilinear(x, mul(alpha, beta)));
    const auto y = random_element(s, rng);
    CHECK(bilinear(x, y) == bilinear(y, x));
    CHECK(bilinear(x, x) == norm(x));
  }
}

TEST_CASE("inverse and powers") {
  const auto s = sedenions();
  CHECK(inverse(s.basis(1)) == -s.basis(1));
  CHECK(inverse(s.scalar(2)) == s.scalar(Q(1, 2)));
  CHECK_THROWS_AS(inverse(s.zero()), std::domain_error);
  CHECK(pow(s.basis(1), 2) == -s.one());
  CHECK(pow(el(s, "e1+e10"), 2) == s.scalar(-2));
  const auto x = el(s, "1/2*e3-e9+2");
  CHECK(pow(x, 1) == x);
  CHECK(pow(x, 0) == s.one());
  const auto o = octonions();
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto y = random_nonzero_element(o, rng);
    CHECK(mul(y, inverse(y)) == o.one());
    CHECK(mul(inverse(y), y) == o.one());
  }
}

TEST_CASE("multiplication operators") {
  const auto o = octonions();
  CHECK(left_mul_op(o.one()) == LinOp<Q>::Identity(8, 8));
  CHECK(right_mul_op(o.one()) == LinOp<Q>::Identity(8, 8));
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_element(o, rng);
    const auto x = random_element(o, rng);
    CHECK(apply(left_mul_op(a), x) == mul(a, x));
    CHECK(apply(right_mul_op(a), x) == mul(x, a));
  }
}

TEST_CASE("zero divisors and left division") {
  const auto s = sedenions();
  CHECK(is_zero_divisor(el(s, "e1+e10")));
  CHECK_FALSE(is_zero_divisor(s.basis(1)));
  const auto o = octonions();
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) CHECK_FALSE(is_zero_divisor(random_nonzero_element(o, rng)));

  CHECK_FALSE(solve_left(el(s, "e1+e10"), el(s, "e7+e12")).has_value());
  const auto b = el(s, "3*e4-e11");
  CHECK(solve_left(s.one(), b) == b);
  const auto h = quaternions();
  CHECK(solve_left(h.basis(1), h.basis(2)) == -h.basis(3));
  CHECK_THROWS(solve_left(s.zero(), b));
}

TEST_CASE("float mode agrees with exact mode on integer data") {
  const auto exact = sedenions();
  const auto approx = standard_algebra<double>(4);
  std::mt19937_64 rng_a(41), rng_b(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_element(exact, rng_a);
    const auto y = random_element(exact, rng_a);
    const auto u = random_element(approx, rng_b);
    const auto v = random_element(approx, rng_b);
    const auto p = mul(x, y);
    const auto q = mul(u, v);
    for (Eigen::Index k = 0; k < 16; ++k) CHECK(to_double(p[k]) == doctest::Approx(q[k]));
  }
}

TEST_CASE("identity suite over the octonions") {
  const auto report = identity_report(octonions(), 200, 7);
  for (const auto& r : report.results) {
    INFO(r.name);
    CHECK(r.passed);
    CHECK(r.checked > 0);
  }
}

TEST_CASE("identity suite over the sedenions") {
  const auto s = sedenions();
  const std::vector<std::array<Element<Q>, 3>> extra{{el(s, "e1+e10"), el(s, "e7+e12"), s.one()}};
  const auto report = identity_report(s, 200, 7, extra);
  CHECK_FALSE(report.at("left_alternative").passed);
  CHECK_FALSE(report.at("right_alternative").passed);
  CHECK(report.at("left_alternative").witness.has_value());
  const auto& nm = report.at("norm_multiplicative");
  REQUIRE_FALSE(nm.passed);
  REQUIRE(nm.witness.has_value());
  CHECK(nm.witness->args[0] == el(s, "e1+e10"));
  CHECK(nm.witness->lhs == s.zero());
  CHECK(nm.witness->rhs == s.scalar(4));
  CHECK(report.at("power_associative").passed);
  CHECK(report.at("flexible").passed);
  CHECK(report.at("double_conjugate").passed);
  CHECK(report.at("conjugate_antimultiplicative").passed);
  CHECK(report.at("quadratic_relation").passed);
}

TEST_CASE("quaternions are associative, sedenions are not") {
  const auto h = quaternions();
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_element(h, rng), y = random_element(h, rng), z = random_element(h, rng);
    CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
  }
  const auto o = octonions();
  CHECK(mul(mul(o.basis(1), o.basis(2)), o.basis(4)) != mul(o.basis(1), mul(o.basis(2), o.basis(4))));
}

TEST_CASE("a relabelled basis loses the sedenion zero divisors") {
  CHECK_THROWS_AS(Algebra<Q>(std::vector<Q>{-1, -1, -1, -1}, 1e-9, BasisConvention::bit_reversed),
                  std::logic_error);
}

TEST_CASE("a relabelled octonion basis is still the octonions") {
  const Algebra<Q> o(std::vector<Q>(3, Q(-1)), 1e-9, BasisConvention::bit_reversed);
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_element(o, rng), y = random_element(o, rng);
    CHECK(mul(x, y) == mul_recursive(x, y));
  }
  CHECK(identity_report(o, 50, 1).all_passed());
}
