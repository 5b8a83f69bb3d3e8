// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "cdalg/eigen_lmr.hpp"
#include "cdalg/identities.hpp"
#include "cdalg/io.hpp"
#include "cdalg/operators.hpp"
#include "cdalg/poly.hpp"
#include "cdalg/roots.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace cdalg;

namespace {

using Q = Rational;

struct Verdict {
  bool passed = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && passed) detail << "failed: " << what << "; ";
    passed = passed && ok;
  }
};

struct Sedenion {
  Algebra<Q> s = standard_algebra<Q>(4);
  Element<Q> alpha = s.basis(1) + s.basis(10);
  Element<Q> beta = s.basis(7) + s.basis(12);
};

void sedenion_zero_divisors(Verdict& v) {
  const Sedenion S;
  v.expect(mul(S.alpha, S.beta).is_zero(), "alpha beta = 0");
  v.expect(mul(S.beta, S.alpha).is_zero(), "beta alpha = 0");
  v.expect(norm(S.alpha) == 2 && norm(S.beta) == 2, "N(alpha) = N(beta) = 2");
  v.expect(norm<Q>(mul(S.alpha, S.beta)) == 0, "N(alpha beta) = 0");
  v.expect(norm(S.alpha) * norm(S.beta) == 4, "N(alpha) N(beta) = 4");
}

void identity_suite(Verdict& v) {
  const auto octo = identity_report(standard_algebra<Q>(3), 500, 2024);
  for (const char* name :
       {"moufang_middle", "moufang_left", "moufang_right", "left_alternative", "right_alternative", "flexible",
        "inverse_moufang", "bilinear_diagonal", "bilinear_right_transfer", "bilinear_left_transfer"}) {
    const auto& r = octo.at(name);
    v.expect(r.passed && r.checked >= 490, std::string(name) + " holds in O");
  }
  const Sedenion S;
  const auto sed = identity_report(S.s, 500, 2024, {{S.alpha, S.beta, S.s.one()}});
  for (const char* name : {"left_alternative", "right_alternative", "norm_multiplicative"}) {
    const auto& r = sed.at(name);
    v.expect(!r.passed && r.witness.has_value(), std::string(name) + " fails in S with a witness");
  }
  const auto& nm = sed.at("norm_multiplicative");
  if (nm.witness) {
    v.expect(nm.witness->lhs.real() == 0 && nm.witness->rhs.real() == 4, "witness N(alpha beta) = 0 != 4");
    v.detail << "S witness: x=" << format_element(nm.witness->args[0])
             << " y=" << format_element(nm.witness->args[1]) << "; ";
  }
  const auto& pa = sed.at("power_associative");
  v.expect(pa.passed && pa.checked == 501, "power-associativity holds in S on 500 samples");
}

void companion_scalarity(Verdict& v) {
  int checked = 0;
  for (int depth : {2, 3, 4}) {
    const auto algebra = standard_algebra<Q>(depth);
    std::mt19937_64 rng(300 + depth);
    for (int trial = 0; trial < 200; ++trial) {
      const int degree = 1 + trial % 5;
      const auto f = random_poly(algebra, degree, rng);
      const auto product = mul_poly(f, conj_poly(f));
      bool scalar = product.degree() == 2 * degree;
      for (const auto& c : product.coeffs()) scalar = scalar && c.is_scalar();
      v.expect(scalar, "companion of a degree " + std::to_string(degree) + " polynomial is scalar");
      ++checked;
    }
  }
  v.detail << checked << " polynomials; ";
}

void root_factor_counterexamples(Verdict& v) {
  const Sedenion S;
  const Poly<Q> f(S.s, {S.beta, S.s.zero(), Q(1, 2) * S.beta});
  v.expect(eval(f, S.alpha).is_zero(), "f(alpha) = 0 for f = 1/2 beta x^2 + beta");
  v.expect(right_divide_linear(f, S.alpha).remainder == S.beta, "remainder of f by x - alpha is beta");
  const Poly<Q> g(S.s, {S.s.zero(), S.beta, S.beta});
  v.expect(mul_poly(Poly<Q>(S.s, {S.beta, S.beta}), Poly<Q>::linear(S.alpha)) == g,
           "beta x^2 + beta x = (beta x + beta)(x - alpha)");
  v.expect(right_divide_linear(g, S.alpha).remainder.is_zero(), "x - alpha is a right factor");
  v.expect(eval(g, S.alpha) == -2 * S.beta, "g(alpha) = -2 beta");
}

void rootless_linear(Verdict& v) {
  const Sedenion S;
  v.expect(!solve_left(S.alpha, S.beta).has_value(), "alpha x = beta has no solution");
  const auto c = companion(Poly<Q>(S.s, {-S.beta, S.alpha}));
  v.expect(c.coeffs == (Coeffs<Q>(3) << 2, 0, 2).finished(), "companion of alpha x - beta is 2x^2 + 2");
}

void octonion_closure(Verdict& v) {
  const auto o = standard_algebra<double>(3);
  std::mt19937_64 rng(600);
  double worst_root = 0.0, worst_factor = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int degree = 2 + trial % 3;
    const auto f = random_poly(o, degree, rng);
    int verified = 0;
    for (const auto& cls : all_roots(f)) {
      const double scale = root_scale(f, cls.n);
      if (cls.kind == RootKind::isolated) {
        const double r = max_abs(eval(f, *cls.lambda));
        worst_root = std::max(worst_root, r / scale);
        if (r <= 1e-6 * scale) ++verified;
      } else if (cls.kind == RootKind::spherical) {
        double r = 0.0;
        for (const auto& p : sphere_samples(o, cls.t, cls.n)) r = std::max(r, max_abs(eval(f, p)));
        worst_root = std::max(worst_root, r / scale);
        if (r <= 1e-6 * scale) ++verified;
      }
    }
    v.expect(verified >= 1, "polynomial " + std::to_string(trial) + " has a verified root");
    const auto fac = factorize(f);
    const double err = coeff_distance(expand(fac), f) / max_coeff_abs(f);
    worst_factor = std::max(worst_factor, err);
    v.expect(err <= 1e-6, "factorization of polynomial " + std::to_string(trial) + " reconstructs f");
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max root residual/scale %.2e; max relative factor error %.2e; ", worst_root,
                worst_factor);
  v.detail << buf;
}

void quaternion_cubic(Verdict& v) {
  const auto h = standard_algebra<double>(2);
  const Poly<double> f(h, {h.basis(1), h.one(), h.zero(), (1.0 / 3.0) * h.one()});
  const auto classes = all_roots(f);
  int isolated = 0, spherical = 0;
  std::vector<Complex> roots;
  for (const auto& cls : classes) {
    if (cls.kind == RootKind::spherical) ++spherical;
    if (cls.kind != RootKind::isolated) continue;
    ++isolated;
    const auto& lambda = *cls.lambda;
    v.expect(std::abs(lambda[2]) <= 1e-8 && std::abs(lambda[3]) <= 1e-8, "root is complex");
    v.expect(max_abs(eval(f, lambda)) <= 1e-9 * root_scale(f, cls.n), "root residual");
    roots.push_back(complex_part(lambda));
  }
  v.expect(isolated == 3 && spherical == 0, "exactly three isolated roots");
  const auto fp = derivative(f);
  v.expect(classify_sphere(fp, 0, 1).kind == RootKind::spherical, "f' is spherical on (0, 1)");
  const auto j = sphere_point(h, 0, 1, 1);
  v.expect(j == h.basis(2), "sampled critical point is j");
  v.expect(max_abs(eval(fp, j)) <= 1e-12, "f'(j) = 0");
  const double dist = hull_distance(roots, j);
  v.expect(dist > 0, "dist(j, hull of roots) > 0");
  char buf[64];
  std::snprintf(buf, sizeof buf, "dist(j, hull) %.6f; ", dist);
  v.detail << buf;
}

void matrix_example(Verdict& v) {
  const auto h = standard_algebra<Q>(2);
  const auto o = standard_algebra<Q>(3);
  const auto i = h.basis(1), j = h.basis(2), ij = mul(i, j);
  const Matrix2<Q> bh{i, h.one(), ij, j};
  const auto inv = invert_h_matrix(bh);
  const Q half(-1, 2);
  v.expect(inv && *inv == Matrix2<Q>{half * i, half * ij, -(half * h.one()), half * j},
           "B^{-1} = -1/2 [[i, ij], [-1, j]]");

  const auto b = embed(bh, o);
  const auto l = o.basis(4), io = embed(i, o), ijo = embed(ij, o);
  const auto zero = zero_in_spectrum(b);
  v.expect(zero.member, "zero_in_spectrum(B)");
  if (zero.witness) {
    Coeffs<Q> rest = zero.witness->coords();
    rest[4] = 0;
    v.expect(rest.isZero() && (*zero.witness)[4] != 0, "kernel witness parallel to l");
    v.detail << "witness " << format_element(*zero.witness) << "; ";
  }
  const Vec2<Q> w{-l, mul(io, l)};
  const auto bw = matvec(b, w);
  v.expect(bw[0].is_zero() && bw[1].is_zero(), "B w = 0");
  const auto bw2 = matvec(b, right_scale(w, inverse(l)));
  v.expect(!(bw2[0].is_zero() && bw2[1].is_zero()), "B (w l^{-1}) != 0");

  const Matrix2<Q> left{io, o.zero(), o.zero(), ijo};
  const Matrix2<Q> right{o.one(), -io, o.one(), io};
  v.expect(matmul(left, right) == b, "B = left * right");
  const auto tri = triangular_spectrum(SquareMatrix<Q>{2, {left.a, left.b, left.c, left.d}});
  v.expect(tri.size() == 2 && tri[0].first == io && tri[1].first == ijo, "left factor spectrum {i, ij}");
  v.expect(!zero_in_spectrum(right).member, "right factor: 0 not in spectrum");

  const Poly<Q> f(o, {-ijo, io - embed(j, o), o.one()});
  v.expect(lmr_member(f, Element<Q>(-io)).member, "-i in LMR(x^2 + (i - j) x - ij)");
}

void oracle_agreement(Verdict& v) {
  const auto o = standard_algebra<double>(3);
  std::mt19937_64 rng(900);
  int pairs = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix2<double> m{random_element(o, rng), random_nonzero_element(o, rng), random_element(o, rng),
                            random_element(o, rng)};
    std::vector<EigenPair<double>> emitted{eig_exists(m)};
    for (auto& p : eig_from_t(m, random_nonzero_element(o, rng))) emitted.push_back(std::move(p));
    for (const auto& p : emitted) {
      ++pairs;
      const double sigma = relative_smallest_singular_value(shifted_block_operator(m, p.lambda));
      worst = std::max(worst, sigma);
      v.expect(spectrum_oracle(m, p.lambda, 1e-8), "O eigenpair passes the oracle");
      const double vmax = std::max(max_abs(p.v[0]), max_abs(p.v[1]));
      v.expect(eigen_residual(m, p.lambda, p.v) <= 1e-8 * (1 + max_abs(m) + max_abs(p.lambda)) * vmax,
               "O eigenpair residual");
    }
  }
  const auto h = standard_algebra<double>(2);
  int points = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix2<double> m{random_element(h, rng), random_nonzero_element(h, rng), random_element(h, rng),
                            random_element(h, rng)};
    const auto s = assoc_eig2x2(m);
    std::vector<Element<double>> reported(s.points);
    for (const auto& fam : s.families) {
      for (auto& p : s.family_samples(fam)) reported.push_back(std::move(p));
    }
    for (const auto& lambda : reported) {
      ++points;
      v.expect(spectrum_oracle(m, lambda, 1e-8), "H eigenvalue makes the 8x8 representation singular");
    }
    // Off-spectrum probe: a + b s with f(s) != 0 must be regular.
    const auto probe_s = random_element(h, rng);
    const auto f = associated_quadratic(m);
    const bool on_spectrum = max_abs(eval(f, probe_s)) <= 1e-6;
    v.expect(spectrum_oracle(m, m.a + mul(m.b, probe_s), 1e-8) == on_spectrum, "H off-spectrum probe agrees");
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d O pairs, max sigma_min %.2e; %d H eigenvalues; ", pairs, worst, points);
  v.detail << buf;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0: no runtime bound
    std::function<void(Verdict&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "sedenion zero divisors", 1.0, sedenion_zero_divisors},
      {2, "identity suite", 10.0, identity_suite},
      {3, "companion scalarity", 0.0, companion_scalarity},
      {4, "root vs right factor", 1.0, root_factor_counterexamples},
      {5, "rootless linear polynomial", 0.0, rootless_linear},
      {6, "octonion closure", 30.0, octonion_closure},
      {7, "quaternion cubic critical points", 0.0, quaternion_cubic},
      {8, "octonion matrix example", 0.0, matrix_example},
      {9, "oracle agreement", 0.0, oracle_agreement},
  };

  const auto suite_start = std::chrono::steady_clock::now();
  bool all = true;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      v.expect(false, "runtime budget " + std::to_string(c.budget_seconds) + " s exceeded");
    }
    all = all && v.passed;
    std::printf("criterion %d %-34s %s  %7.3f s  %s\n", c.id, c.name, v.passed ? "PASS" : "FAIL", seconds,
                v.detail.str().c_str());
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
  const bool in_budget = total < 60.0;
  std::printf("suite total %.3f s (budget 60 s) %s\n", total, in_budget ? "PASS" : "FAIL");
  return all && in_budget ? 0 : 1;
}
