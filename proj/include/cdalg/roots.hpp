#ifndef CDALG_ROOTS_HPP
#define CDALG_ROOTS_HPP

#include "cdalg/algebra.hpp"
#include "cdalg/poly.hpp"

#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cdalg {

using Complex = std::complex<double>;

/// Quadratic-equivalence class {x : Tr(x) = t, N(x) = n} carrying
/// `multiplicity` conjugate pairs of companion roots.
struct Sphere {
  double t = 0.0;
  double n = 0.0;
  int multiplicity = 1;
};

struct RealRoot {
  double value = 0.0;
  int multiplicity = 1;
};

/// Roots of a real polynomial: all complex roots with multiplicity, the
/// conjugate pairs as spheres, and the real roots separately.
struct CompanionRoots {
  std::vector<Complex> roots;
  std::vector<Sphere> spheres;
  std::vector<RealRoot> reals;
};

/// Durand-Kerner iteration on the monic normalization of p, started from
/// (0.4 + 0.9i)^k. Stops once every step is <= tol * max(1, |z|), after at most
/// `max_iterations`; throws std::runtime_error if some root then still has
/// |p(z)| > tol * sum |p_k| |z|^k.
std::vector<Complex> durand_kerner(const ScalarPoly<double>& p, double tol,
                                   int max_iterations = 500);

/// Complex roots of p grouped into (trace, norm) spheres and real roots.
/// Roots closer than sqrt(tol) (relative) are merged into one cluster.
CompanionRoots real_roots_complex(const ScalarPoly<double>& p, double tol);

enum class RootKind { isolated, spherical, none };

std::string_view to_string(RootKind kind);

struct SphereClass {
  double t = 0.0;
  double n = 0.0;
  RootKind kind = RootKind::none;
  std::optional<Element<double>> lambda;  // set when isolated
  double residual = 0.0;                  // |f(lambda)|, or max over samples when spherical
};

/// 1 + max|c_i| (1 + sqrt(n))^deg: the size of the terms of f(lambda) for
/// N(lambda) = n. Residual tolerances are relative to it.
double root_scale(const Poly<double>& f, double n);

/// Point t/2 + sqrt(n - t^2/4) u on the sphere, with u the `index`-th
/// deterministic unit direction in the pure-imaginary subspace (the first
/// dim-1 directions are e_1, ..., e_{dim-1}).
Element<double> sphere_point(const Algebra<double>& algebra, double t, double n, int index);

/// `count` deterministic points of the sphere.
std::vector<Element<double>> sphere_samples(const Algebra<double>& algebra, double t, double n,
                                            int count = 20);

/// Newton refinement of an approximate root with the real Jacobian of
/// lambda -> f(lambda). Keeps the input if no step reduces the residual.
Element<double> polish_root(const Poly<double>& f, const Element<double>& lambda,
                            int iterations = 4);

/// Decides whether the sphere (t, n) carries one root (isolated), consists of
/// roots (spherical) or carries none, from the remainder a x + b of f modulo
/// x^2 - t x + n. Requires an anisotropic algebra of dimension <= 8.
SphereClass classify_sphere(const Poly<double>& f, double t, double n);

/// Roots of f over H or O, one entry per sphere of the companion polynomial
/// (including spheres classified as `none`).
std::vector<SphereClass> all_roots(const Poly<double>& f);

/// f = ((...(c (x - lambda_n))...)(x - lambda_2))(x - lambda_1).
struct Factorization {
  Element<double> leading;
  std::vector<Element<double>> lambdas;  // lambda_n, ..., lambda_1
  double residual = 0.0;                 // max coefficient error of the expansion
};

Factorization factorize(const Poly<double>& f);

/// Nested product of a factorization.
Poly<double> expand(const Factorization& factorization);

/// Euclidean distance from z to the convex hull of `points` in the plane.
double hull_distance(std::span<const Complex> points, Complex z);

/// Distance from an algebra element to the hull of complex points placed in
/// the plane spanned by e_0 and e_1.
double hull_distance(std::span<const Complex> points, const Element<double>& z);

/// Coordinates (e_0, e_1) of an element as a complex number.
Complex complex_part(const Element<double>& x);

}  // namespace cdalg

#endif  // CDALG_ROOTS_HPP
