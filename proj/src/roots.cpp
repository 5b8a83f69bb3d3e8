#include "cdalg/roots.hpp"

#include "cdalg/operators.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cdalg {

namespace {

Complex horner(const std::vector<Complex>& monic, Complex z) {
  Complex acc = 0.0;
  for (auto it = monic.rbegin(); it != monic.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double horner_scale(const std::vector<Complex>& monic, double r) {
  double acc = 0.0;
  for (auto it = monic.rbegin(); it != monic.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

void require_division_algebra(const Algebra<double>& algebra) {
  if (algebra.dim() > 8) {
    throw std::domain_error(
        "root finding via the companion polynomial needs dimension <= 8");
  }
  for (double g : algebra.gammas()) {
    if (!(g < 0.0)) throw std::domain_error("root finding needs an anisotropic (g_i < 0) algebra");
  }
}

// Halton radical inverse.
double radical_inverse(int index, int base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * (index % base);
    index /= base;
    f /= base;
  }
  return result;
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

// An m-fold root of p is a simple root of p^(m-1): Newton there, keeping the
// start if no step reduces |p^(m-1)|.
Complex refine_cluster(const std::vector<double>& monic, Complex z, int multiplicity) {
  std::vector<double> q = monic;
  for (int d = 1; d < multiplicity; ++d) {
    for (std::size_t k = 1; k < q.size(); ++k) q[k - 1] = static_cast<double>(k) * q[k];
    q.pop_back();
  }
  if (q.size() < 2) return z;
  std::vector<double> dq(q.size() - 1);
  for (std::size_t k = 1; k < q.size(); ++k) dq[k - 1] = static_cast<double>(k) * q[k];
  auto eval = [](const std::vector<double>& c, Complex x) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  double best = std::abs(eval(q, z));
  for (int iter = 0; iter < 8 && best > 0.0; ++iter) {
    const Complex slope = eval(dq, z);
    if (slope == 0.0) break;
    const Complex next = z - eval(q, z) / slope;
    const double r = std::abs(eval(q, next));
    if (!(r < best)) break;
    z = next;
    best = r;
  }
  return z;
}

}  // namespace

std::vector<Complex> durand_kerner(const ScalarPoly<double>& p, double tol, int max_iterations) {
  const int n = p.degree();
  if (n < 1) throw std::domain_error("durand_kerner needs degree >= 1");
  std::vector<Complex> monic(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) monic[static_cast<std::size_t>(k)] = p.coeffs[k] / p.coeffs[n];

  std::vector<Complex> z(static_cast<std::size_t>(n));
  const Complex seed(0.4, 0.9);
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::pow(seed, k);

  for (int iter = 0; iter < max_iterations; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex denom = 1.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (denom == 0.0) denom = tol;  // coincident iterates; nudge apart
      const Complex step = horner(monic, z[i]) / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (worst <= tol) break;
  }

  for (const auto& root : z) {
    const double residual = std::abs(horner(monic, root));
    if (!(residual <= tol * horner_scale(monic, std::abs(root)))) {
      throw std::runtime_error("Durand-Kerner iteration did not converge");
    }
  }
  return z;
}

CompanionRoots real_roots_complex(const ScalarPoly<double>& p, double tol) {
  CompanionRoots out;
  out.roots = durand_kerner(p, tol);
  const double cluster = std::sqrt(tol);

  // Group the closed upper half-plane; roots just below the real axis join
  // the real clusters, the rest are conjugates of upper roots.
  struct Cluster {
    Complex sum;
    int count;
    Complex center() const { return sum / static_cast<double>(count); }
  };
  std::vector<Cluster> clusters;
  for (const auto& z : out.roots) {
    if (z.imag() < -cluster * (1.0 + std::abs(z))) continue;
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& c) {
      return std::abs(c.center() - z) <= cluster * (1.0 + std::abs(c.center()));
    });
    if (it == clusters.end()) {
      clusters.push_back({z, 1});
    } else {
      it->sum += z;
      ++it->count;
    }
  }

  const int n = p.degree();
  std::vector<double> monic(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) monic[static_cast<std::size_t>(k)] = p.coeffs[k] / p.coeffs[n];
  for (const auto& c : clusters) {
    const Complex z = refine_cluster(monic, c.center(), c.count);
    if (std::abs(z.imag()) <= cluster * (1.0 + std::abs(z))) {
      out.reals.push_back({z.real(), c.count});
    } else {
      out.spheres.push_back({2.0 * z.real(), std::norm(z), c.count});
    }
  }
  return out;
}

std::string_view to_string(RootKind kind) {
  switch (kind) {
    case RootKind::isolated:
      return "isolated";
    case RootKind::spherical:
      return "spherical";
    case RootKind::none:
      return "none";
  }
  return "none";
}

double root_scale(const Poly<double>& f, double n) {
  return 1.0 + max_coeff_abs(f) * std::pow(1.0 + std::sqrt(std::max(n, 0.0)), f.degree());
}

Element<double> sphere_point(const Algebra<double>& algebra, double t, double n, int index) {
  const Eigen::Index imag_dim = algebra.dim() - 1;
  if (imag_dim == 0) throw std::domain_error("the base field has no spheres");
  Coeffs<double> u = Coeffs<double>::Zero(algebra.dim());
  if (index < imag_dim) {
    u[index + 1] = 1.0;
  } else {
    const int h = index - static_cast<int>(imag_dim) + 1;
    for (Eigen::Index k = 0; k < imag_dim; ++k) {
      u[k + 1] = 2.0 * radical_inverse(h, kPrimes[k % 16]) - 1.0;
    }
    u /= u.norm();
  }
  const double radius = std::sqrt(std::max(0.0, n - t * t / 4.0));
  Coeffs<double> c = radius * u;
  c[0] = t / 2.0;
  return Element<double>(algebra, std::move(c));
}

std::vector<Element<double>> sphere_samples(const Algebra<double>& algebra, double t, double n,
                                            int count) {
  std::vector<Element<double>> out;
  for (int i = 0; i < count; ++i) out.push_back(sphere_point(algebra, t, n, i));
  return out;
}

Element<double> polish_root(const Poly<double>& f, const Element<double>& lambda, int iterations) {
  const auto& algebra = f.algebra();
  const Eigen::Index dim = algebra.dim();
  Element<double> best = lambda;
  double best_residual = magnitude(eval(f, best));
  for (int it = 0; it < iterations && best_residual > 0.0; ++it) {
    // Columns: directional derivatives along e_i, through
    // d(lambda^k)[h] = h lambda^{k-1} + lambda d(lambda^{k-1})[h].
    LinOp<double> jac(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const auto h = algebra.basis(i);
      Element<double> power = algebra.one();
      Element<double> dpower = algebra.zero();
      Element<double> df = algebra.zero();
      for (int k = 1; k <= f.degree(); ++k) {
        dpower = mul(h, power) + mul(best, dpower);
        power = mul(best, power);
        df += mul(f.coeff(k), dpower);
      }
      jac.col(i) = df.coords();
    }
    const Coeffs<double> step =
        jac.colPivHouseholderQr().solve(Coeffs<double>(-eval(f, best).coords()));
    if (!step.allFinite()) break;
    Element<double> next(algebra, best.coords() + step);
    const double r = magnitude(eval(f, next));
    if (!(r < best_residual)) break;
    best = std::move(next);
    best_residual = r;
  }
  return best;
}

SphereClass classify_sphere(const Poly<double>& f, double t, double n) {
  const auto& algebra = f.algebra();
  require_division_algebra(algebra);
  if (f.degree() < 1) throw std::domain_error("classify_sphere needs degree >= 1");
  const double loose = std::sqrt(algebra.tol());
  const double scale = root_scale(f, n);
  SphereClass out{t, n, RootKind::none, std::nullopt, 0.0};

  const double disc = t * t - 4.0 * n;
  if (disc >= -loose * (1.0 + std::abs(n))) {
    // Degenerate sphere: the real points (t +- sqrt(disc)) / 2.
    const double root = std::sqrt(std::max(disc, 0.0));
    double best = std::numeric_limits<double>::infinity();
    for (double r : {(t - root) / 2.0, (t + root) / 2.0}) {
      auto lambda = polish_root(f, algebra.scalar(r));
      const double residual = magnitude(eval(f, lambda));
      if (residual < best) {
        best = residual;
        if (residual <= loose * scale) {
          out.kind = RootKind::isolated;
          out.lambda = lambda;
          out.residual = residual;
        }
      }
    }
    if (out.kind == RootKind::none) out.residual = best;
    return out;
  }

  const auto division = divide_central_quadratic(f, t, n);
  const double a_size = magnitude(division.a) * (1.0 + std::sqrt(n));
  const double b_size = magnitude(division.b);

  if (a_size <= loose * scale) {
    if (b_size <= loose * scale) {
      out.kind = RootKind::spherical;
      for (const auto& p : sphere_samples(algebra, t, n)) {
        out.residual = std::max(out.residual, magnitude(eval(f, p)));
      }
    } else {
      out.residual = b_size;
    }
    return out;
  }

  // a lambda + b = 0 with a invertible: lambda = -a^{-1} b (alternativity).
  auto lambda = polish_root(f, -mul(inverse(division.a), division.b));
  const double residual = magnitude(eval(f, lambda));
  const bool on_sphere = std::abs(trace(lambda) - t) <= loose * (1.0 + std::abs(t)) &&
                         std::abs(norm(lambda) - n) <= loose * (1.0 + n);
  out.residual = residual;
  if (on_sphere && residual <= loose * scale) {
    out.kind = RootKind::isolated;
    out.lambda = std::move(lambda);
  }
  return out;
}

std::vector<SphereClass> all_roots(const Poly<double>& f) {
  const auto& algebra = f.algebra();
  require_division_algebra(algebra);
  if (f.degree() < 1) throw std::domain_error("all_roots needs degree >= 1");
  const auto spheres = real_roots_complex(companion(f), algebra.tol());
  std::vector<SphereClass> out;
  for (const auto& s : spheres.spheres) out.push_back(classify_sphere(f, s.t, s.n));
  for (const auto& r : spheres.reals) out.push_back(classify_sphere(f, 2.0 * r.value, r.value * r.value));
  return out;
}

Factorization factorize(const Poly<double>& f) {
  const auto& algebra = f.algebra();
  require_division_algebra(algebra);
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<Element<double>> found;  // lambda_1 first
  Poly<double> current = f;
  while (current.degree() >= 1) {
    std::optional<Element<double>> root;
    for (const auto& cls : all_roots(current)) {
      if (cls.kind == RootKind::isolated) {
        root = cls.lambda;
        break;
      }
      if (cls.kind == RootKind::spherical && !root) root = sphere_point(algebra, cls.t, cls.n, 0);
    }
    if (!root) throw std::runtime_error("no root found while factoring");
    auto division = right_divide_linear(current, *root);
    const double loose = std::sqrt(algebra.tol());
    if (magnitude(division.remainder) > loose * root_scale(current, norm(*root))) {
      throw std::runtime_error("root does not split off as a right factor");
    }
    found.push_back(*root);
    current = std::move(division.quotient);
  }
  Factorization out{current.leading(), {found.rbegin(), found.rend()}, 0.0};
  out.residual = coeff_distance(expand(out), f);
  return out;
}

Poly<double> expand(const Factorization& factorization) {
  const auto& algebra = factorization.leading.algebra();
  Poly<double> product(algebra, {factorization.leading});
  for (const auto& lambda : factorization.lambdas) {
    product = mul_poly(product, Poly<double>::linear(lambda));
  }
  return product;
}

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double u = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + u * ab));
}

}  // namespace

double hull_distance(std::span<const Complex> points, Complex z) {
  if (points.empty()) throw std::invalid_argument("hull_distance needs at least one point");
  std::vector<Complex> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return std::abs(z - pts[0]);

  // Andrew's monotone chain, counter-clockwise.
  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  double best = std::numeric_limits<double>::infinity();
  bool inside = hull.size() >= 3;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Complex a = hull[i];
    const Complex b = hull[(i + 1) % hull.size()];
    best = std::min(best, segment_distance(z, a, b));
    if (cross(a, b, z) < 0) inside = false;
  }
  return inside ? 0.0 : best;
}

Complex complex_part(const Element<double>& x) {
  return x.dim() >= 2 ? Complex(x[0], x[1]) : Complex(x[0], 0.0);
}

double hull_distance(std::span<const Complex> points, const Element<double>& z) {
  const double planar = hull_distance(points, complex_part(z));
  const double off_plane = z.dim() > 2 ? z.coords().tail(z.dim() - 2).norm() : 0.0;
  return std::hypot(planar, off_plane);
}

}  // namespace cdalg
