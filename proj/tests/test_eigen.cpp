#include "cdalg/eigen_lmr.hpp"
#include "cdalg/io.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace cdalg;

namespace {

using Q = Rational;

template <typename Scalar>
Matrix2<Scalar> example_matrix(const Algebra<Scalar>& algebra) {
  const auto i = algebra.basis(1), j = algebra.basis(2);
  return {i, algebra.one(), mul(i, j), j};
}

template <typename Scalar, typename Rng>
Matrix2<Scalar> random_matrix(const Algebra<Scalar>& algebra, Rng& rng) {
  return {random_element(algebra, rng), random_nonzero_element(algebra, rng), random_element(algebra, rng),
          random_element(algebra, rng)};
}

double pair_scale(const Matrix2<double>& m, const EigenPair<double>& p) {
  return 1 + max_abs(m) + max_abs(p.lambda);
}

}  // namespace

TEST_CASE("eigenpair verification") {
  const auto o = standard_algebra<Q>(3);
  const auto b = example_matrix(o);
  const auto l = o.basis(4);
  CHECK(verify_eigenpair(b, o.zero(), Vec2<Q>{-l, mul(o.basis(1), l)}));
  CHECK_FALSE(verify_eigenpair(b, o.zero(), Vec2<Q>{-o.one(), o.basis(1)}));
  const auto id = Matrix2<Q>::identity(o);
  CHECK(verify_eigenpair(id, o.one(), Vec2<Q>{o.basis(3), o.basis(6) + o.one()}));
  CHECK_THROWS(verify_eigenpair(id, o.one(), Vec2<Q>{o.zero(), o.zero()}));
}

TEST_CASE("triangular spectra") {
  const auto o = standard_algebra<Q>(3);
  const auto i = o.basis(1), ij = o.basis(3);
  auto diag = triangular_spectrum(SquareMatrix<Q>{2, {i, o.zero(), o.zero(), ij}});
  REQUIRE(diag.size() == 2);
  CHECK(diag[0].first == i);
  CHECK(diag[1].first == ij);

  const auto h = standard_algebra<Q>(2);
  const SquareMatrix<Q> lower{2, {h.scalar(2), h.zero(), h.scalar(5), h.scalar(3)}};
  const auto spec = triangular_spectrum(lower);
  REQUIRE(spec.size() == 2);
  CHECK(spec[0].first == h.scalar(2));
  CHECK(spec[1].first == h.scalar(3));
  for (const auto& [value, v] : spec) {
    const Matrix2<Q> m{lower(0, 0), lower(0, 1), lower(1, 0), lower(1, 1)};
    CHECK(verify_eigenpair(m, value, Vec2<Q>{v[0], v[1]}));
  }

  const auto one = triangular_spectrum(SquareMatrix<Q>{2, {h.one(), h.zero(), h.zero(), h.one()}});
  REQUIRE(one.size() == 1);
  CHECK(one[0].first == h.one());

  CHECK_THROWS(triangular_spectrum(SquareMatrix<Q>{2, {h.one(), h.one(), h.one(), h.one()}}));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    SquareMatrix<Q> m{n, {}};
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m.entries.push_back(c <= r ? random_nonzero_element(o, rng) : o.zero());
    }
    for (const auto& [value, v] : triangular_spectrum(m)) {
      for (int r = 0; r < n; ++r) {
        Element<Q> row = o.zero();
        for (int c = 0; c < n; ++c) row += mul(m(r, c), v[static_cast<std::size_t>(c)]);
        CHECK(row == mul(value, v[static_cast<std::size_t>(r)]));
      }
    }
  }
}

TEST_CASE("eigenpairs shift along a left multiplier") {
  const auto o = standard_algebra<Q>(3);
  const auto b = example_matrix(o);
  const EigenPair<Q> pair{o.zero(), {-o.basis(4), o.basis(5)}};
  const auto same = shift_eigenpair(o.one(), pair);
  CHECK(same.lambda == pair.lambda);
  CHECK(same.v == pair.v);
  const auto e4 = o.basis(4);
  const auto shifted = shift_eigenpair(e4, pair);
  CHECK(verify_eigenpair(left_scale(e4, b), shifted.lambda, shifted.v));

  // Triangular matrices have exact pairs; shift them by random e.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix2<Q> m{random_element(o, rng), o.zero(), random_element(o, rng), random_element(o, rng)};
    for (const auto& [value, v] : triangular_spectrum(SquareMatrix<Q>{2, {m.a, m.b, m.c, m.d}})) {
      const EigenPair<Q> p{value, {v[0], v[1]}};
      REQUIRE(verify_eigenpair(m, p.lambda, p.v));
      const auto e = random_nonzero_element(o, rng);
      const auto q = shift_eigenpair(e, p);
      CHECK(verify_eigenpair(left_scale(e, m), q.lambda, q.v));
    }
  }

  const auto od = standard_algebra<double>(3);
  std::mt19937_64 rng_d(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(od, rng_d);
    const auto p = eig_exists(m);
    const auto e = random_nonzero_element(od, rng_d);
    const auto q = shift_eigenpair(e, p);
    CHECK(eigen_residual(left_scale(e, m), q.lambda, q.v) <= 1e-8 * (1 + max_abs(e)) * pair_scale(m, p) * 10);
  }
}

TEST_CASE("associated quadratic sign convention") {
  const auto o = standard_algebra<Q>(3);
  const auto b = example_matrix(o);
  const auto f = associated_quadratic(b);
  CHECK(f.coeff(2) == o.one());
  CHECK(f.coeff(1) == o.basis(1) - o.basis(2));
  CHECK(f.coeff(0) == -o.basis(3));
}

TEST_CASE("eigenpairs from a multiplier t") {
  const auto o = standard_algebra<double>(3);
  const auto b = example_matrix(o);
  const auto pairs = eig_from_t(b, o.basis(4));
  bool has_zero = false;
  for (const auto& p : pairs) {
    CHECK(eigen_residual(b, p.lambda, p.v) <= 1e-8 * pair_scale(b, p));
    CHECK(spectrum_oracle(b, p.lambda, 1e-8));
    has_zero = has_zero || max_abs(p.lambda) < 1e-7;
  }
  CHECK(has_zero);

  // t = 1: every root s of f gives lambda = a + b s with eigenvector (1, s).
  for (const auto& p : eig_from_t(b, o.one())) {
    CHECK(max_abs(p.v[0] - o.one()) < 1e-12);
    const auto s = p.v[1];
    CHECK(max_abs(p.lambda - (b.a + mul(b.b, s))) < 1e-12);
    CHECK(max_abs(eval(associated_quadratic(b), s)) < 1e-8);
  }

  // Scalar b: lambda = a + b s with s = v_2 v_1^{-1}, whatever t is.
  std::mt19937_64 rng(9);
  const Matrix2<double> scalar_b{random_element(o, rng), o.scalar(2), random_element(o, rng),
                                 random_element(o, rng)};
  for (int trial = 0; trial < 5; ++trial) {
    const auto t = random_nonzero_element(o, rng);
    const auto pairs_t = eig_from_t(scalar_b, t);
    CHECK_FALSE(pairs_t.empty());
    for (const auto& p : pairs_t) {
      const auto s = mul(p.v[1], inverse(p.v[0]));
      CHECK(max_abs(p.lambda - (scalar_b.a + 2.0 * s)) < 1e-9 * (1 + max_abs(p.lambda)));
    }
  }
}

TEST_CASE("existence of an eigenpair") {
  const auto o = standard_algebra<double>(3);
  const auto id = Matrix2<double>::identity(o);
  const auto p = eig_exists(id);
  CHECK(p.lambda == o.one());
  CHECK(p.v[0] == o.one());
  CHECK(p.v[1] == o.zero());

  std::mt19937_64 rng(10);
  const Matrix2<double> tri{random_element(o, rng), o.zero(), random_element(o, rng), random_element(o, rng)};
  const auto tp = eig_exists(tri);
  CHECK(tp.lambda == tri.a);
  CHECK(eigen_residual(tri, tp.lambda, tp.v) <= 1e-12 * pair_scale(tri, tp));
  const Matrix2<double> upper{tri.a, o.zero(), o.zero(), tri.d};
  CHECK(eig_exists(upper).v[0] == o.one());
  CHECK(eig_exists(upper).v[1] == o.zero());

  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(o, rng);
    const auto q = eig_exists(m);
    CHECK(eigen_residual(m, q.lambda, q.v) <= 1e-8 * pair_scale(m, q));
    CHECK(spectrum_oracle(m, q.lambda, 1e-8));
    CHECK(max_abs(q.v[0]) > 1e-6);
  }
}

TEST_CASE("LMR membership") {
  const auto o = standard_algebra<Q>(3);
  const auto i = o.basis(1), j = o.basis(2);
  const Poly<Q> f(o, {-mul(i, j), i - j, o.one()});
  const auto at_minus_i = lmr_member(f, Element<Q>(-i));
  REQUIRE(at_minus_i.member);
  REQUIRE(at_minus_i.witness.has_value());
  const auto u = *at_minus_i.witness;
  CHECK(eval(left_scale(u, f), -i).is_zero());
  for (const Q c : {Q(2), Q(-3), Q(1, 7)}) {
    CHECK(eval(left_scale(c * u, f), -i).is_zero());
    CHECK(lmr_operator(f, Element<Q>(-i)) * (c * u).coords() == Coeffs<Q>::Zero(8));
  }
  CHECK_FALSE(lmr_member(f, i + j).member);

  const auto od = standard_algebra<double>(3);
  const Poly<double> fd(od, {-od.basis(3), od.basis(1) - od.basis(2), od.one()});
  const auto s = 0.5 * od.basis(2) - 0.5 * od.basis(1) + (1 / std::sqrt(2.0)) * od.basis(4);
  CHECK(lmr_member(fd, s).member);
  CHECK(lmr_member(fd, s).smallest_singular_value < 1e-12);

  // A genuine root is a member with witness proportional to 1.
  const auto root = o.basis(5) + o.scalar(2);
  const auto g = mul_poly(Poly<Q>(o, {o.basis(3), o.one()}), Poly<Q>::linear(root));
  const auto r = lmr_member(g, root);
  REQUIRE(r.member);
  CHECK(r.witness->is_scalar());
}

TEST_CASE("spectrum membership through LMR") {
  const auto o = standard_algebra<double>(3);
  const auto b = example_matrix(o);
  CHECK(lmr_spectrum_member(b, o.zero()).member);
  CHECK(spectrum_oracle(b, o.zero(), 1e-8));
  for (const auto& p : eig_from_t(b, o.one())) CHECK(lmr_spectrum_member(b, p.lambda).member);
  CHECK_FALSE(lmr_spectrum_member(b, o.basis(2)).member);
  CHECK_FALSE(spectrum_oracle(b, o.basis(2), 1e-8));
  CHECK(lmr_spectrum_member(b, o.basis(1) + o.basis(2)).member);
  CHECK(spectrum_oracle(b, o.basis(1) + o.basis(2), 1e-8));

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix2<double> m{random_element(o, rng), o.scalar(static_cast<double>(1 + rng() % 3)),
                            random_element(o, rng), random_element(o, rng)};
    const auto lambda = random_element(o, rng);
    CHECK(lmr_spectrum_member(m, lambda).member == spectrum_oracle(m, lambda, 1e-8));
  }
}

TEST_CASE("zero in the spectrum") {
  const auto o = standard_algebra<Q>(3);
  const auto b = example_matrix(o);
  const auto z = zero_in_spectrum(b);
  REQUIRE(z.member);
  REQUIRE(z.witness.has_value());
  Coeffs<Q> rest = z.witness->coords();
  rest[4] = 0;
  CHECK(rest.isZero());

  const Matrix2<Q> right{o.one(), -o.basis(1), o.one(), o.basis(1)};
  CHECK_FALSE(zero_in_spectrum(right).member);

  const Matrix2<Q> d_zero{o.basis(3), o.one(), o.basis(2), o.zero()};
  CHECK_FALSE(zero_in_spectrum(d_zero).member);
  const Matrix2<Q> cd_zero{o.basis(3), o.one(), o.zero(), o.zero()};
  CHECK(zero_in_spectrum(cd_zero).member);
  CHECK_THROWS_AS(zero_in_spectrum(Matrix2<Q>::identity(o)), std::domain_error);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix(o, rng);
    if (trial % 3 == 0) {
      // Plant a kernel vector: choose c so that d^{-1}(c t) = b^{-1}(a t).
      const auto t = random_nonzero_element(o, rng);
      if (m.d.is_zero()) m.d = o.one();
      m.c = mul(mul(m.d, mul(inverse(m.b), mul(m.a, t))), inverse(t));
    }
    CHECK(zero_in_spectrum(m).member == spectrum_oracle(m, o.zero()));
  }
}

TEST_CASE("inverse of a quaternion matrix") {
  const auto h = standard_algebra<Q>(2);
  const auto b = example_matrix(h);
  const auto inv = invert_h_matrix(b);
  REQUIRE(inv.has_value());
  const Q half(-1, 2);
  CHECK(*inv == Matrix2<Q>{half * h.basis(1), half * h.basis(3), -(half * h.one()), half * h.basis(2)});
  CHECK(matmul(b, *inv) == Matrix2<Q>::identity(h));
  CHECK(invert_h_matrix(Matrix2<Q>::identity(h)) == Matrix2<Q>::identity(h));
  CHECK_FALSE(invert_h_matrix(Matrix2<Q>{h.basis(1), h.one(), h.basis(1), h.one()}).has_value());
  const Matrix2<Q> swapped{h.zero(), h.basis(2), h.basis(1), h.one()};
  const auto si = invert_h_matrix(swapped);
  REQUIRE(si.has_value());
  CHECK(matmul(swapped, *si) == Matrix2<Q>::identity(h));
  CHECK(matmul(*si, swapped) == Matrix2<Q>::identity(h));
}

TEST_CASE("spectra over the quaternions") {
  const auto h = standard_algebra<double>(2);
  const Matrix2<double> tri{h.basis(1), h.zero(), h.basis(3), h.basis(2)};
  const auto t = assoc_eig2x2(tri);
  REQUIRE(t.points.size() == 2);
  CHECK(t.families.empty());

  const Matrix2<double> rot{h.zero(), h.one(), -h.one(), h.zero()};
  const auto r = assoc_eig2x2(rot);
  CHECK(r.points.empty());
  REQUIRE(r.families.size() == 1);
  CHECK(r.families[0].t == doctest::Approx(0).epsilon(1e-9));
  CHECK(r.families[0].n == doctest::Approx(1));
  for (const auto& lambda : r.family_samples(r.families[0])) {
    CHECK(max_abs(mul(lambda, lambda) + h.one()) < 1e-9);
    CHECK(spectrum_oracle(rot, lambda, 1e-8));
  }

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix(h, rng);
    const auto s = assoc_eig2x2(m);
    for (const auto& lambda : s.points) CHECK(spectrum_oracle(m, lambda, 1e-8));
    for (const auto& fam : s.families) {
      for (const auto& lambda : s.family_samples(fam)) CHECK(spectrum_oracle(m, lambda, 1e-8));
    }
  }
}

TEST_CASE("sampled spectrum") {
  const auto o = standard_algebra<double>(3);
  const auto b = example_matrix(o);
  const auto pairs = sample_spectrum(b, 32, 1);
  CHECK(pairs.size() > 2);
  for (const auto& p : pairs) {
    CHECK(spectrum_oracle(b, p.lambda, 1e-8));
    CHECK(max_abs(p.v[0]) > 1e-6);
  }
}
