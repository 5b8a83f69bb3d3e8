#ifndef CDALG_IDENTITIES_HPP
#define CDALG_IDENTITIES_HPP

#include "cdalg/algebra.hpp"

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cdalg {

template <typename Scalar>
struct IdentityWitness {
  std::array<Element<Scalar>, 3> args;  // x, y, z
  Element<Scalar> lhs;
  Element<Scalar> rhs;
};

template <typename Scalar>
struct IdentityResult {
  std::string name;
  bool passed = true;
  int checked = 0;
  std::optional<IdentityWitness<Scalar>> witness;  // first failure
};

template <typename Scalar>
struct IdentityReport {
  std::vector<IdentityResult<Scalar>> results;

  const IdentityResult<Scalar>& at(const std::string& name) const {
    for (const auto& r : results) {
      if (r.name == name) return r;
    }
    throw std::out_of_range("no identity named " + name);
  }
  bool all_passed() const {
    for (const auto& r : results) {
      if (!r.passed) return false;
    }
    return true;
  }
};

namespace detail {

template <typename Scalar>
struct IdentityCheck {
  std::string name;
  bool needs_invertible_x;
  // Returns (lhs, rhs); scalar-valued identities put the scalars in e_0.
  std::function<std::pair<Element<Scalar>, Element<Scalar>>(
      const Element<Scalar>&, const Element<Scalar>&, const Element<Scalar>&)>
      sides;
};

template <typename Scalar>
std::vector<IdentityCheck<Scalar>> identity_checks() {
  using E = Element<Scalar>;
  using Sides = std::pair<E, E>;
  auto s = [](const E& like, const Scalar& v) { return like.algebra().scalar(v); };
  std::vector<IdentityCheck<Scalar>> checks;
  checks.push_back({"double_conjugate", false, [](const E& x, const E&, const E&) {
                      return Sides{conj(conj(x)), x};
                    }});
  checks.push_back({"conjugate_antimultiplicative", false, [](const E& x, const E& y, const E&) {
                      return Sides{conj(x * y), conj(y) * conj(x)};
                    }});
  checks.push_back({"quadratic_relation", false, [](const E& x, const E&, const E&) {
                      return Sides{x * x - trace(x) * x + norm(x) * x.algebra().one(),
                                   x.algebra().zero()};
                    }});
  checks.push_back({"moufang_middle", false, [](const E& x, const E& y, const E& z) {
                      return Sides{(x * y) * (z * x), (x * (y * z)) * x};
                    }});
  checks.push_back({"moufang_left", false, [](const E& x, const E& y, const E& z) {
                      return Sides{((z * x) * z) * y, z * (x * (z * y))};
                    }});
  checks.push_back({"moufang_right", false, [](const E& x, const E& y, const E& z) {
                      return Sides{((x * y) * z) * y, x * ((y * z) * y)};
                    }});
  checks.push_back({"left_alternative", false, [](const E& x, const E& y, const E&) {
                      return Sides{x * (x * y), (x * x) * y};
                    }});
  checks.push_back({"right_alternative", false, [](const E& x, const E& y, const E&) {
                      return Sides{(y * x) * x, y * (x * x)};
                    }});
  checks.push_back({"flexible", false, [](const E& x, const E& y, const E&) {
                      return Sides{(x * y) * x, x * (y * x)};
                    }});
  checks.push_back({"power_associative", false, [](const E& x, const E&, const E&) {
                      // Every split a + b = k of x^k for k <= 6, collected as a
                      // single difference against the reference power.
                      std::vector<E> p{x.algebra().one(), x};
                      for (int k = 2; k <= 6; ++k) p.push_back(x * p.back());
                      E diff = x.algebra().zero();
                      E left = x;  // left-nested bracketing ((x x) x)...
                      for (int k = 2; k <= 6; ++k) {
                        for (int a = 2; a < k; ++a) diff += p[a] * p[k - a] - p[k];
                        left = left * x;
                        diff += left - p[k];
                      }
                      return Sides{diff, x.algebra().zero()};
                    }});
  checks.push_back({"inverse_moufang", true, [](const E& x, const E& y, const E& z) {
                      const E xi = inverse(x);
                      return Sides{x * ((xi * y) * z), (y * (z * x)) * xi};
                    }});
  checks.push_back({"norm_multiplicative", false, [s](const E& x, const E& y, const E&) {
                      return Sides{s(x, norm<Scalar>(x * y)), s(x, norm(x) * norm(y))};
                    }});
  checks.push_back({"bilinear_diagonal", false, [s](const E& x, const E&, const E&) {
                      return Sides{s(x, bilinear(x, x)), s(x, norm(x))};
                    }});
  checks.push_back({"bilinear_right_transfer", false, [s](const E& a, const E& b, const E& c) {
                      return Sides{s(a, bilinear<Scalar>(a, b * c)), s(a, bilinear<Scalar>(a * conj(c), b))};
                    }});
  checks.push_back({"bilinear_left_transfer", false, [s](const E& a, const E& b, const E& c) {
                      return Sides{s(a, bilinear<Scalar>(a, b * c)), s(a, bilinear<Scalar>(conj(b) * a, c))};
                    }});
  return checks;
}

}  // namespace detail

/// Checks the standard Cayley-Dickson identities on seeded random triples
/// (integer coordinates in [-3, 3]) and on any explicitly supplied triples,
/// which are checked first. Each failing identity keeps its first witness.
template <typename Scalar>
IdentityReport<Scalar> identity_report(
    const Algebra<Scalar>& algebra, int trials, std::uint64_t seed,
    const std::vector<std::array<Element<Scalar>, 3>>& extra_triples = {}) {
  if (trials < 1) throw std::invalid_argument("identity_report needs at least one trial");
  const auto checks = detail::identity_checks<Scalar>();
  IdentityReport<Scalar> report;
  for (const auto& c : checks) report.results.push_back({c.name, true, 0, std::nullopt});

  // Scale-aware comparison in float mode; all intermediate values are
  // polynomial in coordinates bounded by 3.
  const double tol = algebra.tol() * 1e6;
  auto run = [&](const std::array<Element<Scalar>, 3>& args) {
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& check = checks[i];
      auto& result = report.results[i];
      if (check.needs_invertible_x && is_negligible(norm(args[0]), algebra.tol())) continue;
      auto [lhs, rhs] = check.sides(args[0], args[1], args[2]);
      ++result.checked;
      if (!approx_equal(lhs, rhs, tol) && result.passed) {
        result.passed = false;
        result.witness = IdentityWitness<Scalar>{args, lhs, rhs};
      }
    }
  };

  for (const auto& triple : extra_triples) {
    for (const auto& e : triple) {
      if (e.algebra() != algebra) throw std::invalid_argument("algebra mismatch");
    }
    run(triple);
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto x = random_element(algebra, rng);
    auto y = random_element(algebra, rng);
    auto z = random_element(algebra, rng);
    run({x, y, z});
  }
  return report;
}

}  // namespace cdalg

#endif  // CDALG_IDENTITIES_HPP
