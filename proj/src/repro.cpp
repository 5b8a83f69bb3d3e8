#include "cdalg/repro.hpp"

#include "cdalg/eigen_lmr.hpp"
#include "cdalg/identities.hpp"
#include "cdalg/operators.hpp"
#include "cdalg/poly.hpp"
#include "cdalg/roots.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace cdalg {

namespace {

using Q = Rational;

class Checks {
 public:
  void expect(bool condition, const std::string& what) {
    ++count_;
    if (!condition && first_failure_.empty()) first_failure_ = what;
  }
  void note(const std::string& text) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += text;
  }
  ReproOutcome outcome() const {
    if (!first_failure_.empty()) return {false, "failed: " + first_failure_};
    std::string detail = std::to_string(count_) + " checks";
    if (!notes_.empty()) detail += "; " + notes_;
    return {true, detail};
  }

 private:
  int count_ = 0;
  std::string first_failure_;
  std::string notes_;
};

std::string sci(double x) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << x;
  return os.str();
}

struct SedenionPair {
  Algebra<Q> algebra;
  Element<Q> alpha, beta;
};

SedenionPair sedenions() {
  auto s = standard_algebra<Q>(4);
  return {s, s.basis(1) + s.basis(10), s.basis(7) + s.basis(12)};
}

template <typename Scalar>
Poly<Scalar> poly_of(const Algebra<Scalar>& algebra, std::vector<Element<Scalar>> coeffs) {
  return Poly<Scalar>(algebra, std::move(coeffs));
}

ReproOutcome right_factor_case(std::uint64_t seed) {
  Checks checks;
  auto o = standard_algebra<Q>(3);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_nonzero_element(o, rng);
    const auto lambda = random_element(o, rng);
    // a x - a lambda
    const auto linear = poly_of(o, {-mul(a, lambda), a});
    checks.expect(eval(linear, lambda).is_zero(), "linear root");
    const auto lin_div = right_divide_linear(linear, lambda);
    checks.expect(lin_div.remainder.is_zero(), "linear right factor");
    // x^2 + a x - lambda^2 - a lambda = (x + lambda + a)(x - lambda)
    const auto quad = poly_of(o, {-mul(lambda, lambda) - mul(a, lambda), a, o.one()});
    checks.expect(eval(quad, lambda).is_zero(), "monic quadratic root");
    const auto quad_div = right_divide_linear(quad, lambda);
    checks.expect(quad_div.remainder.is_zero(), "monic quadratic right factor");
    checks.expect(quad_div.quotient == poly_of(o, {lambda + a, o.one()}),
                  "quotient equals x + lambda + a");
    // Converse: (x + c)(x - lambda) has lambda as a root.
    const auto c = random_element(o, rng);
    const auto product = mul_poly(poly_of(o, {c, o.one()}), Poly<Q>::linear(lambda));
    checks.expect(eval(product, lambda).is_zero(), "right factor gives a root");
    // A non-root is never a right factor in O.
    const auto other = lambda + o.basis(1 + trial % 7);
    checks.expect(eval(quad, other).is_zero() == right_divide_linear(quad, other).remainder.is_zero(),
                  "root iff right factor");
  }
  return checks.outcome();
}

ReproOutcome sedenion_factor_examples(std::uint64_t) {
  Checks checks;
  auto [s, alpha, beta] = sedenions();
  const Q half(1, 2);
  // f = 1/2 beta x^2 + beta: alpha is a root but x - alpha is no right factor.
  const auto f = poly_of(s, {beta, s.zero(), half * beta});
  checks.expect(eval(f, alpha).is_zero(), "alpha is a root of 1/2 beta x^2 + beta");
  const auto div = right_divide_linear(f, alpha);
  checks.expect(div.remainder == beta, "remainder is beta");
  checks.expect(div.quotient == poly_of(s, {s.zero(), half * beta}), "quotient is 1/2 beta x");
  // f = beta x^2 + beta x = (beta x + beta)(x - alpha) but f(alpha) = -2 beta.
  const auto g = poly_of(s, {s.zero(), beta, beta});
  checks.expect(mul_poly(poly_of(s, {beta, beta}), Poly<Q>::linear(alpha)) == g,
                "(beta x + beta)(x - alpha) = beta x^2 + beta x");
  checks.expect(eval(g, alpha) == Q(-2) * beta, "f(alpha) = -2 beta");
  checks.expect(right_divide_linear(g, alpha).remainder.is_zero(), "remainder vanishes");
  return checks.outcome();
}

ReproOutcome octonion_closure_case(std::uint64_t seed) {
  Checks checks;
  auto o = standard_algebra<double>(3);
  std::mt19937_64 rng(seed);
  double worst_residual = 0.0, worst_factor = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int degree = 2 + trial % 3;
    const auto f = random_poly(o, degree, rng);
    int verified = 0;
    for (const auto& cls : all_roots(f)) {
      if (cls.kind == RootKind::none) continue;
      const auto lambda = cls.lambda ? *cls.lambda : sphere_point(o, cls.t, cls.n, 0);
      const double residual = magnitude(eval(f, lambda)) / root_scale(f, norm(lambda));
      worst_residual = std::max(worst_residual, residual);
      if (residual <= 1e-6) ++verified;
    }
    checks.expect(verified >= 1, "every polynomial has a verified root");
    const auto fac = factorize(f);
    const double rel = fac.residual / (1.0 + max_coeff_abs(f));
    worst_factor = std::max(worst_factor, rel);
    checks.expect(rel <= 1e-6, "factorization reconstructs the coefficients");
  }
  checks.note("max root residual " + sci(worst_residual));
  checks.note("max factor error " + sci(worst_factor));
  return checks.outcome();
}

ReproOutcome rootless_case(std::uint64_t seed) {
  Checks checks;
  auto [s, alpha, beta] = sedenions();
  checks.expect(!solve_left(alpha, beta).has_value(), "alpha x = beta has no solution");
  checks.expect(bilinear(beta, beta) == Q(2), "<beta, beta> = 2");
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_element(s, rng);
    const Q lhs = bilinear(mul(alpha, x), beta);
    checks.expect(lhs == -bilinear(x, mul(alpha, beta)), "<alpha x, beta> = -<x, alpha beta>");
    checks.expect(lhs == 0, "<alpha x, beta> = 0, so alpha x != beta");
  }
  const auto f = poly_of(s, {-beta, alpha});
  checks.expect(companion(f).coeffs == (Coeffs<Q>(3) << 2, 0, 2).finished(), "C_f = 2x^2 + 2");
  return checks.outcome();
}

Element<Q> eval_scalar_poly(const ScalarPoly<Q>& p, const Element<Q>& x) {
  Element<Q> sum = x.algebra().zero();
  Element<Q> power = x.algebra().one();
  for (Eigen::Index k = 0; k < p.coeffs.size(); ++k) {
    if (k > 0) power = mul(x, power);
    sum += p.coeffs[k] * power;
  }
  return sum;
}

ReproOutcome companion_failure_case(std::uint64_t) {
  Checks checks;
  auto [s, alpha, beta] = sedenions();
  const auto f = poly_of(s, {s.zero(), alpha});
  checks.expect(eval(f, beta).is_zero(), "beta is a root of alpha x");
  const auto cf = companion(f);
  checks.expect(cf.coeffs == (Coeffs<Q>(3) << 0, 0, 2).finished(), "C_{alpha x} = 2x^2");
  checks.expect(!eval_scalar_poly(cf, beta).is_zero(), "beta is not a root of 2x^2");
  const auto g = poly_of(s, {-beta, alpha});
  const auto cg = companion(g);
  checks.expect(cg.coeffs == (Coeffs<Q>(3) << 2, 0, 2).finished(), "C_{alpha x - beta} = 2x^2 + 2");
  checks.expect(eval_scalar_poly(cg, s.basis(1)).is_zero(), "e1 (trace 0, norm 1) solves 2x^2 + 2");
  checks.expect(!solve_left(alpha, beta).has_value(), "yet alpha x - beta has no root");
  return checks.outcome();
}

ReproOutcome equivalent_roots_case(std::uint64_t) {
  Checks checks;
  auto [s, alpha, beta] = sedenions();
  const auto f = poly_of(s, {s.zero(), alpha});
  checks.expect(eval(f, beta).is_zero() && eval(f, -beta).is_zero(), "beta and -beta are roots");
  checks.expect(trace(beta) == trace(Element<Q>(-beta)) && norm(beta) == norm(Element<Q>(-beta)),
                "beta and -beta are quadratically equivalent");
  checks.expect(trace(alpha) == trace(beta) && norm(alpha) == norm(beta),
                "alpha is quadratically equivalent to beta");
  checks.expect(eval(f, alpha) == s.scalar(Q(-2)), "f(alpha) = alpha^2 = -2, not a root");
  return checks.outcome();
}

ReproOutcome critical_points_case(std::uint64_t) {
  Checks checks;
  auto h = standard_algebra<double>(2);
  const auto f = poly_of(h, {h.basis(1), h.one(), h.zero(), h.scalar(1.0 / 3.0)});
  const auto roots = all_roots(f);
  std::vector<Complex> points;
  int isolated = 0, spherical = 0;
  double off_plane = 0.0, residual = 0.0;
  for (const auto& cls : roots) {
    if (cls.kind == RootKind::spherical) ++spherical;
    if (cls.kind != RootKind::isolated) continue;
    ++isolated;
    const auto& lambda = *cls.lambda;
    off_plane = std::max({off_plane, std::abs(lambda[2]), std::abs(lambda[3])});
    residual = std::max(residual, cls.residual);
    points.push_back(complex_part(lambda));
  }
  checks.expect(isolated == 3 && spherical == 0, "three isolated roots, none spherical");
  checks.expect(off_plane <= 1e-8, "roots are complex");
  const auto df = derivative(f);
  checks.expect(coeff_distance(df, poly_of(h, {h.one(), h.zero(), h.one()})) == 0.0, "f' = x^2 + 1");
  const auto cls = classify_sphere(df, 0.0, 1.0);
  checks.expect(cls.kind == RootKind::spherical, "f' is spherical on (0, 1)");
  double distance = 0.0;
  if (!points.empty()) distance = hull_distance(points, h.basis(2));
  checks.expect(distance > 0.0, "j lies outside the hull of the roots");
  checks.note("root residual " + sci(residual));
  checks.note("dist(j, hull) " + sci(distance));
  return checks.outcome();
}

ReproOutcome matrix_example_case(std::uint64_t) {
  Checks checks;
  auto h = standard_algebra<Q>(2);
  auto o = standard_algebra<Q>(3);
  const auto i = h.basis(1), j = h.basis(2), ij = mul(i, j);
  const Matrix2<Q> bh{i, h.one(), ij, j};

  const auto inv = invert_h_matrix(bh);
  const Q minus_half(-1, 2);
  checks.expect(inv.has_value(), "B is invertible over H");
  if (inv) {
    const Matrix2<Q> expected{minus_half * i, minus_half * ij, -(minus_half * h.one()), minus_half * j};
    checks.expect(*inv == expected, "B^{-1} = -1/2 [[i, ij], [-1, j]]");
    checks.expect(matmul(bh, *inv) == Matrix2<Q>::identity(h) &&
                      matmul(*inv, bh) == Matrix2<Q>::identity(h),
                  "two-sided inverse");
  }
  checks.expect(!spectrum_oracle(bh, h.zero()), "0 is not a left eigenvalue over H");

  const auto b = embed(bh, o);
  const auto l = o.basis(4);
  const auto zero = zero_in_spectrum(b);
  checks.expect(zero.member, "0 is a left eigenvalue over O");
  if (zero.witness) {
    const auto& t = *zero.witness;
    Coeffs<Q> rest = t.coords();
    rest[4] = 0;
    checks.expect(rest.isZero() && t[4] != 0, "kernel witness is parallel to l");
  }
  checks.expect(spectrum_oracle(b, o.zero()), "block operator of B is singular");
  const Vec2<Q> w{-l, mul(embed(i, o), l)};
  checks.expect(matvec(b, w)[0].is_zero() && matvec(b, w)[1].is_zero(), "B w = 0");
  const auto w_shift = right_scale(w, inverse(l));
  checks.expect(w_shift[0] == -o.one() && w_shift[1] == embed(i, o), "w l^{-1} = (-1, i)");
  const auto bw = matvec(b, w_shift);
  checks.expect(!(bw[0].is_zero() && bw[1].is_zero()), "w l^{-1} is not an eigenvector");

  const Matrix2<Q> left{embed(i, o), o.zero(), o.zero(), embed(ij, o)};
  const Matrix2<Q> right{o.one(), -embed(i, o), o.one(), embed(i, o)};
  checks.expect(matmul(left, right) == b, "B = diag(i, ij) [[1, -i], [1, i]]");
  const auto tri = triangular_spectrum(SquareMatrix<Q>{2, {left.a, left.b, left.c, left.d}});
  checks.expect(tri.size() == 2 && tri[0].first == embed(i, o) && tri[1].first == embed(ij, o),
                "left factor has spectrum {i, ij}");
  checks.expect(!spectrum_oracle(left, o.zero()), "left factor is not a zero divisor");
  checks.expect(!zero_in_spectrum(right).member, "right factor does not have 0 in its spectrum");
  checks.expect(!spectrum_oracle(right, o.zero()), "right factor is not a zero divisor");

  const auto f = associated_quadratic(b);
  checks.expect(f == poly_of(o, {-embed(ij, o), embed(i - j, o), o.one()}),
                "f = x^2 + (i - j) x - ij");
  checks.expect(lmr_member(f, Element<Q>(-embed(i, o))).member, "-i in LMR(f)");

  // xi = 1/2 point of the LMR family, in float mode.
  auto od = standard_algebra<double>(3);
  const Poly<double> fd(od, {-od.basis(3), od.basis(1) - od.basis(2), od.one()});
  const auto s = 0.5 * od.basis(2) - 0.5 * od.basis(1) + (1.0 / std::sqrt(2.0)) * od.basis(4);
  const auto half = lmr_member(fd, s);
  checks.expect(half.member, "xi = 1/2 point lies in LMR(f)");
  checks.note("sigma_min(xi=1/2) " + sci(half.smallest_singular_value));
  return checks.outcome();
}

ReproOutcome identity_case(std::uint64_t seed) {
  Checks checks;
  auto o = standard_algebra<Q>(3);
  const auto octo = identity_report(o, 100, seed);
  checks.expect(octo.all_passed(), "all identities hold in O");
  auto [s, alpha, beta] = sedenions();
  const auto sed = identity_report(s, 100, seed, {{alpha, beta, s.one()}});
  const auto& nm = sed.at("norm_multiplicative");
  checks.expect(!nm.passed, "norm multiplicativity fails in S");
  if (nm.witness) {
    checks.expect(nm.witness->args[0] == alpha && nm.witness->args[1] == beta,
                  "witness is (alpha, beta)");
    checks.expect(nm.witness->lhs.real() == 0 && nm.witness->rhs.real() == 4, "N(alpha beta) = 0 != 4");
  }
  checks.expect(!sed.at("left_alternative").passed && !sed.at("right_alternative").passed,
                "alternativity fails in S");
  checks.expect(sed.at("power_associative").passed, "power-associativity holds in S");
  checks.expect(sed.at("flexible").passed, "flexibility holds in S");
  return checks.outcome();
}

}  // namespace

ReproOutcome sedenion_zero_divisor_check(BasisConvention convention) {
  Checks checks;
  Algebra<Q> s;
  try {
    s = Algebra<Q>(std::vector<Q>(4, Q(-1)), 1e-9, convention);
  } catch (const std::logic_error& e) {
    return {false, std::string("failed: ") + e.what()};
  }
  const auto alpha = s.basis(1) + s.basis(10);
  const auto beta = s.basis(7) + s.basis(12);
  checks.expect(mul(alpha, beta).is_zero() && mul(beta, alpha).is_zero(), "alpha beta = beta alpha = 0");
  checks.expect(norm(alpha) == 2 && norm(beta) == 2, "N(alpha) = N(beta) = 2");
  checks.expect(norm<Q>(mul(alpha, beta)) == 0 && norm(alpha) * norm(beta) == 4,
                "N(alpha beta) = 0 != 4 = N(alpha) N(beta)");
  checks.expect(is_zero_divisor(alpha) && is_zero_divisor(beta), "alpha, beta are zero divisors");
  return checks.outcome();
}

const std::vector<ReproCase>& repro_cases() {
  static const std::vector<ReproCase> cases = {
      {"R1", "sedenion-zero-divisors", "exact",
       [](std::uint64_t) { return sedenion_zero_divisor_check(BasisConvention::doubled); }},
      {"R2", "linear-quadratic-right-factor", "exact", right_factor_case},
      {"R3", "root-vs-right-factor-sedenion", "exact", sedenion_factor_examples},
      {"R4", "octonion-closure-factorization", "tolerance", octonion_closure_case},
      {"R5", "rootless-linear-sedenion", "exact", rootless_case},
      {"R6", "companion-correspondence-failure", "exact", companion_failure_case},
      {"R7", "isolated-spherical-failure", "exact", equivalent_roots_case},
      {"R8", "critical-points-quaternion-cubic", "tolerance", critical_points_case},
      {"R9", "octonion-matrix-zero-eigenvalue", "exact", matrix_example_case},
      {"R10", "identity-suite", "exact", identity_case},
  };
  return cases;
}

std::vector<ReproResult> run_repro(std::uint64_t seed, const std::optional<std::string>& only) {
  std::vector<ReproResult> out;
  for (const auto& c : repro_cases()) {
    if (only && *only != c.id) continue;
    ReproResult r{c.id, c.locator, c.mode, false, "", 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
      auto outcome = c.run(seed);
      r.passed = outcome.passed;
      r.detail = std::move(outcome.detail);
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  if (only && out.empty()) throw std::invalid_argument("unknown case " + *only);
  return out;
}

std::string format_result_line(const ReproResult& r) {
  std::ostringstream os;
  os << r.id << "\t" << r.locator << "\t" << r.mode << "\t" << (r.passed ? "PASS" : "FAIL") << "\t"
     << r.detail;
  return os.str();
}

json results_to_json(const std::vector<ReproResult>& results, std::uint64_t seed) {
  json cases = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    cases.push_back({{"id", r.id},
                     {"locator", r.locator},
                     {"mode", r.mode},
                     {"passed", r.passed},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
  }
  return json{{"seed", seed}, {"passed", all}, {"cases", cases}};
}

}  // namespace cdalg
