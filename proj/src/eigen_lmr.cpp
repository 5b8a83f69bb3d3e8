#include "cdalg/eigen_lmr.hpp"

#include "cdalg/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace cdalg {

namespace {

double radical_inverse(std::uint64_t index, std::uint64_t base) {
  double result = 0.0;
  double f = 1.0 / static_cast<double>(base);
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= static_cast<double>(base);
  }
  return result;
}

constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

void require_nonzero_b(const Matrix2<double>& m) {
  if (max_abs(m.b) <= m.algebra().tol()) {
    throw std::domain_error("b = 0: use the triangular spectrum");
  }
}

}  // namespace

std::vector<EigenPair<double>> eig_from_t(const Matrix2<double>& m, const Element<double>& t,
                                          int sphere_samples) {
  m.check();
  require_nonzero_b(m);
  if (t.is_zero()) throw std::invalid_argument("eig_from_t needs t != 0");
  const auto t_inv = inverse(t);
  const auto shifted = left_scale(t_inv, associated_quadratic(m));
  const auto tb = mul(t_inv, m.b);

  std::vector<EigenPair<double>> out;
  auto emit = [&](const Element<double>& s) {
    out.push_back({m.a + mul(t, mul(tb, s)), {t, mul(s, t)}});
  };
  for (const auto& cls : all_roots(shifted)) {
    if (cls.kind == RootKind::isolated) {
      emit(*cls.lambda);
    } else if (cls.kind == RootKind::spherical) {
      for (const auto& s : cdalg::sphere_samples(m.algebra(), cls.t, cls.n, sphere_samples)) emit(s);
    }
  }
  return out;
}

EigenPair<double> eig_exists(const Matrix2<double>& m) {
  m.check();
  const auto& algebra = m.algebra();
  if (max_abs(m.b) <= algebra.tol()) {
    auto tri = triangular_spectrum(SquareMatrix<double>{2, {m.a, m.b, m.c, m.d}});
    auto& [value, v] = tri.front();
    return {value, {v[0], v[1]}};
  }
  auto pairs = eig_from_t(m, algebra.one(), 1);
  if (pairs.empty()) throw std::runtime_error("no root of the associated quadratic was found");
  return pairs.front();
}

LmrResult<double> lmr_spectrum_member(const Matrix2<double>& m, const Element<double>& lambda) {
  m.check();
  require_nonzero_b(m);
  if (!m.b.is_scalar()) throw std::invalid_argument("LMR spectrum test needs a scalar b");
  const auto s = (lambda - m.a) / m.b.real();
  return lmr_member(associated_quadratic(m), s);
}

std::vector<EigenPair<double>> sample_spectrum(const Matrix2<double>& m, int samples,
                                               std::uint64_t seed) {
  m.check();
  const auto& algebra = m.algebra();
  if (max_abs(m.b) <= algebra.tol()) {
    std::vector<EigenPair<double>> out;
    for (auto& [value, v] : triangular_spectrum(SquareMatrix<double>{2, {m.a, m.b, m.c, m.d}})) {
      out.push_back({value, {v[0], v[1]}});
    }
    return out;
  }

  std::vector<EigenPair<double>> out;
  const double merge = 10 * algebra.tol();
  std::uint64_t index = seed * static_cast<std::uint64_t>(samples) + 1;
  for (int taken = 0; taken < samples; ++index) {
    Coeffs<double> c(algebra.dim());
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      c[k] = 2.0 * radical_inverse(index, kPrimes[k % 8]) - 1.0;
    }
    if (c.norm() < 0.1) continue;
    ++taken;
    const Element<double> t(algebra, c / c.norm());
    for (auto& pair : eig_from_t(m, t)) {
      bool duplicate = false;
      for (const auto& seen : out) duplicate = duplicate || approx_equal(seen.lambda, pair.lambda, merge);
      if (!duplicate) out.push_back(std::move(pair));
    }
  }
  return out;
}

std::vector<Element<double>> AssocSpectrum::family_samples(const Family& family, int count) const {
  std::vector<Element<double>> out;
  for (const auto& s : sphere_samples(a.algebra(), family.t, family.n, count)) {
    out.push_back(a + mul(b, s));
  }
  return out;
}

AssocSpectrum assoc_eig2x2(const Matrix2<double>& m) {
  m.check();
  const auto& algebra = m.algebra();
  if (algebra.dim() > 4) throw std::domain_error("assoc_eig2x2 needs an associative algebra");
  AssocSpectrum out{{}, {}, m.a, m.b};
  if (max_abs(m.b) <= algebra.tol()) {
    out.points.push_back(m.a);
    if (!approx_equal(m.a, m.d, 10 * algebra.tol())) out.points.push_back(m.d);
    return out;
  }
  for (const auto& cls : all_roots(associated_quadratic(m))) {
    if (cls.kind == RootKind::isolated) {
      out.points.push_back(m.a + mul(m.b, *cls.lambda));
    } else if (cls.kind == RootKind::spherical) {
      out.families.push_back({cls.t, cls.n});
    }
  }
  return out;
}

}  // namespace cdalg
