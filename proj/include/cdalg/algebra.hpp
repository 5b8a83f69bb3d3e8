#ifndef CDALG_ALGEBRA_HPP
#define CDALG_ALGEBRA_HPP

#include "cdalg/scalar.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cdalg {

/// How basis indices are labelled. `doubled` is the standard one
/// (e_{k+h} = e_k l); `bit_reversed` reads each index with its bits reversed and
/// exists only as a negative control for the sedenion convention check.
enum class BasisConvention { doubled, bit_reversed };

template <typename Scalar>
class Element;

/// Descriptor of the Cayley-Dickson algebra F{g_1,...,g_m}.
///
/// The algebra is a cheap handle to shared immutable data: the parameter list
/// and the structure constants of the standard basis. Products of basis
/// elements are always monomials, e_i e_j = c_ij e_{i xor j}, and c_ij is
/// computed once from the recursive doubling product.
template <typename Scalar>
class Algebra {
 public:
  Algebra() : Algebra(std::vector<Scalar>{}) {}

  explicit Algebra(std::vector<Scalar> gammas, double tol = 1e-9,
                   BasisConvention convention = BasisConvention::doubled);

  int depth() const { return static_cast<int>(data_->gammas.size()); }
  Eigen::Index dim() const { return Eigen::Index{1} << depth(); }
  const std::vector<Scalar>& gammas() const { return data_->gammas; }
  double tol() const { return data_->tol; }
  BasisConvention convention() const { return data_->convention; }

  /// Coefficient c_ij in e_i e_j = c_ij e_{i xor j}.
  const Scalar& structure(Eigen::Index i, Eigen::Index j) const {
    return data_->table(i, j);
  }

  Element<Scalar> zero() const;
  Element<Scalar> one() const;
  Element<Scalar> scalar(const Scalar& s) const;
  Element<Scalar> basis(Eigen::Index k) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.data_ == b.data_ ||
           (a.data_->gammas == b.data_->gammas && a.data_->convention == b.data_->convention);
  }
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

 private:
  struct Data {
    std::vector<Scalar> gammas;
    double tol;
    BasisConvention convention;
    LinOp<Scalar> table;
  };
  std::shared_ptr<const Data> data_;
};

/// Element of an algebra: coordinates relative to e_0,...,e_{2^m-1}.
template <typename Scalar>
class Element {
 public:
  Element() = default;
  Element(Algebra<Scalar> algebra, Coeffs<Scalar> coords)
      : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (coords_.size() != algebra_.dim()) {
      throw std::invalid_argument("coordinate vector does not match algebra dimension");
    }
  }

  const Algebra<Scalar>& algebra() const { return algebra_; }
  const Coeffs<Scalar>& coords() const { return coords_; }
  const Scalar& operator[](Eigen::Index k) const { return coords_[k]; }
  Eigen::Index dim() const { return coords_.size(); }

  const Scalar& real() const { return coords_[0]; }
  bool is_zero() const { return coords_.isZero(); }
  bool is_scalar() const { return coords_.tail(coords_.size() - 1).isZero(); }

  Element& operator+=(const Element& other) {
    check_same(other);
    coords_ += other.coords_;
    return *this;
  }
  Element& operator-=(const Element& other) {
    check_same(other);
    coords_ -= other.coords_;
    return *this;
  }
  Element& operator*=(const Scalar& s) {
    coords_ *= s;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a) { return Element(a.algebra_, -a.coords_); }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator/(const Element& a, const Scalar& s) {
    return Element(a.algebra_, a.coords_ / s);
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  void check_same(const Element& other) const {
    if (algebra_ != other.algebra_) throw std::invalid_argument("algebra mismatch");
  }

 private:
  Algebra<Scalar> algebra_;
  Coeffs<Scalar> coords_;
};

namespace detail {

template <typename Scalar>
Coeffs<Scalar> conj_coords(const Coeffs<Scalar>& x) {
  Coeffs<Scalar> out = -x;
  out[0] = x[0];
  return out;
}

/// The doubling product (q + r l)(s + t l) = qs + g conj(t) r + (tq + r conj(s)) l,
/// evaluated recursively on raw coordinates. `gammas` holds g_1..g_depth.
template <typename Scalar>
Coeffs<Scalar> doubling_product(const Coeffs<Scalar>& x, const Coeffs<Scalar>& y,
                                const std::vector<Scalar>& gammas, std::size_t depth) {
  if (depth == 0) {
    Coeffs<Scalar> out(1);
    out[0] = x[0] * y[0];
    return out;
  }
  const Eigen::Index h = x.size() / 2;
  const Coeffs<Scalar> q = x.head(h);
  const Coeffs<Scalar> r = x.tail(h);
  const Coeffs<Scalar> s = y.head(h);
  const Coeffs<Scalar> t = y.tail(h);
  const Scalar& gamma = gammas[depth - 1];

  Coeffs<Scalar> out(x.size());
  out.head(h) = doubling_product<Scalar>(q, s, gammas, depth - 1) +
                gamma * doubling_product<Scalar>(conj_coords<Scalar>(t), r, gammas, depth - 1);
  out.tail(h) = doubling_product<Scalar>(t, q, gammas, depth - 1) +
                doubling_product<Scalar>(r, conj_coords<Scalar>(s), gammas, depth - 1);
  return out;
}

/// Standard index carried by label k.
inline Eigen::Index basis_label(Eigen::Index k, int depth, BasisConvention convention) {
  if (convention == BasisConvention::doubled) return k;
  Eigen::Index out = 0;
  for (int bit = 0; bit < depth; ++bit) {
    if (k & (Eigen::Index{1} << bit)) out |= Eigen::Index{1} << (depth - 1 - bit);
  }
  return out;
}

template <typename Scalar>
void verify_sedenion_convention(const Algebra<Scalar>& algebra);

}  // namespace detail

template <typename Scalar>
Algebra<Scalar>::Algebra(std::vector<Scalar> gammas, double tol, BasisConvention convention) {
  for (const auto& g : gammas) {
    if (g == 0) throw std::invalid_argument("Cayley-Dickson parameter must be nonzero");
  }
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
  if (gammas.size() > 10) throw std::invalid_argument("doubling depth too large");

  auto data = std::make_shared<Data>();
  data->gammas = std::move(gammas);
  data->tol = tol;
  data->convention = convention;
  const Eigen::Index n = Eigen::Index{1} << data->gammas.size();
  data->table = LinOp<Scalar>::Zero(n, n);
  const int depth = static_cast<int>(data->gammas.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index si = detail::basis_label(i, depth, convention);
      const Eigen::Index sj = detail::basis_label(j, depth, convention);
      Coeffs<Scalar> ei = Coeffs<Scalar>::Zero(n);
      Coeffs<Scalar> ej = Coeffs<Scalar>::Zero(n);
      ei[si] = 1;
      ej[sj] = 1;
      Coeffs<Scalar> p = detail::doubling_product<Scalar>(ei, ej, data->gammas, data->gammas.size());
      // Bit reversal commutes with xor, so labels multiply like standard indices.
      const Eigen::Index k = si ^ sj;
      data->table(i, j) = p[k];
      p[k] = 0;
      if (!p.isZero()) throw std::logic_error("basis product is not a monomial");
    }
  }
  data_ = std::move(data);
  detail::verify_sedenion_convention(*this);
}

template <typename Scalar>
Element<Scalar> Algebra<Scalar>::zero() const {
  return Element<Scalar>(*this, Coeffs<Scalar>::Zero(dim()));
}

template <typename Scalar>
Element<Scalar> Algebra<Scalar>::scalar(const Scalar& s) const {
  Coeffs<Scalar> c = Coeffs<Scalar>::Zero(dim());
  c[0] = s;
  return Element<Scalar>(*this, std::move(c));
}

template <typename Scalar>
Element<Scalar> Algebra<Scalar>::one() const {
  return scalar(Scalar(1));
}

template <typename Scalar>
Element<Scalar> Algebra<Scalar>::basis(Eigen::Index k) const {
  if (k < 0 || k >= dim()) throw std::out_of_range("basis index out of range");
  Coeffs<Scalar> c = Coeffs<Scalar>::Zero(dim());
  c[k] = 1;
  return Element<Scalar>(*this, std::move(c));
}

template <typename Scalar>
Algebra<Scalar> make_algebra(std::vector<Scalar> gammas, double tol = 1e-9) {
  return Algebra<Scalar>(std::move(gammas), tol);
}

/// R{-1,...,-1} with `depth` doublings: 1 = C, 2 = H, 3 = O, 4 = S.
template <typename Scalar>
Algebra<Scalar> standard_algebra(int depth, double tol = 1e-9) {
  return Algebra<Scalar>(std::vector<Scalar>(static_cast<std::size_t>(depth), Scalar(-1)), tol);
}

// ---------------------------------------------------------------------------
// Arithmetic

template <typename Scalar>
Element<Scalar> mul(const Element<Scalar>& x, const Element<Scalar>& y) {
  x.check_same(y);
  const auto& algebra = x.algebra();
  const Eigen::Index n = algebra.dim();
  Coeffs<Scalar> out = Coeffs<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      out[i ^ j] += algebra.structure(i, j) * x[i] * y[j];
    }
  }
  return Element<Scalar>(algebra, std::move(out));
}

template <typename Scalar>
Element<Scalar> operator*(const Element<Scalar>& x, const Element<Scalar>& y) {
  return mul(x, y);
}

/// Product through the recursive doubling formula, bypassing the structure
/// table. Slow; kept as an independent route for tests.
template <typename Scalar>
Element<Scalar> mul_recursive(const Element<Scalar>& x, const Element<Scalar>& y) {
  x.check_same(y);
  const auto& algebra = x.algebra();
  const Eigen::Index n = algebra.dim();
  Coeffs<Scalar> xs(n), ys(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index label = detail::basis_label(k, algebra.depth(), algebra.convention());
    xs[label] = x[k];
    ys[label] = y[k];
  }
  const Coeffs<Scalar> ps =
      detail::doubling_product<Scalar>(xs, ys, algebra.gammas(), algebra.gammas().size());
  Coeffs<Scalar> out(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out[k] = ps[detail::basis_label(k, algebra.depth(), algebra.convention())];
  }
  return Element<Scalar>(algebra, std::move(out));
}

template <typename Scalar>
Element<Scalar> conj(const Element<Scalar>& x) {
  return Element<Scalar>(x.algebra(), detail::conj_coords<Scalar>(x.coords()));
}

/// Tr(x) = x + conj(x), a scalar.
template <typename Scalar>
Scalar trace(const Element<Scalar>& x) {
  return Scalar(2) * x.real();
}

/// N(x) = x conj(x), a scalar.
template <typename Scalar>
Scalar norm(const Element<Scalar>& x) {
  return mul(x, conj(x)).real();
}

/// Polarization of the norm: (N(x+y) - N(x) - N(y)) / 2.
template <typename Scalar>
Scalar bilinear(const Element<Scalar>& x, const Element<Scalar>& y) {
  x.check_same(y);
  return (norm<Scalar>(x + y) - norm(x) - norm(y)) / Scalar(2);
}

template <typename Scalar>
Element<Scalar> inverse(const Element<Scalar>& x) {
  if (x.is_zero()) throw std::domain_error("inverse of zero");
  const Scalar n = norm(x);
  if (is_negligible(n, x.algebra().tol())) {
    throw std::domain_error("element has isotropic norm; no inverse");
  }
  return conj(x) / n;
}

/// Powers are well defined since Cayley-Dickson algebras are power-associative.
template <typename Scalar>
Element<Scalar> pow(const Element<Scalar>& x, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  Element<Scalar> out = x.algebra().one();
  for (int i = 0; i < k; ++i) out = mul(x, out);
  return out;
}

template <typename Scalar>
double max_abs(const Element<Scalar>& x) {
  double m = 0.0;
  for (Eigen::Index k = 0; k < x.dim(); ++k) m = std::max(m, abs_value(x[k]));
  return m;
}

/// Euclidean length of the coordinate vector (sqrt N(x) for anisotropic norms).
template <typename Scalar>
double magnitude(const Element<Scalar>& x) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < x.dim(); ++k) {
    const double v = to_double(x[k]);
    s += v * v;
  }
  return std::sqrt(s);
}

/// Exact equality in rational mode; max coordinate difference <= tol otherwise.
template <typename Scalar>
bool approx_equal(const Element<Scalar>& x, const Element<Scalar>& y, double tol) {
  x.check_same(y);
  if constexpr (is_exact_v<Scalar>) {
    return x.coords() == y.coords();
  } else {
    return (x.coords() - y.coords()).cwiseAbs().maxCoeff() <= tol;
  }
}

/// Same coordinates in a larger algebra of the tower (A sits in A{g} as the
/// first half of the basis).
template <typename Scalar>
Element<Scalar> embed(const Element<Scalar>& x, const Algebra<Scalar>& target) {
  const auto& g = x.algebra().gammas();
  const auto& tg = target.gammas();
  if (tg.size() < g.size() || !std::equal(g.begin(), g.end(), tg.begin())) {
    throw std::invalid_argument("target algebra does not contain the source algebra");
  }
  Coeffs<Scalar> c = Coeffs<Scalar>::Zero(target.dim());
  c.head(x.dim()) = x.coords();
  return Element<Scalar>(target, std::move(c));
}

/// Element with integer coordinates drawn uniformly from [lo, hi].
template <typename Scalar, typename Rng>
Element<Scalar> random_element(const Algebra<Scalar>& algebra, Rng& rng, int lo = -3,
                               int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Coeffs<Scalar> c(algebra.dim());
  for (Eigen::Index k = 0; k < c.size(); ++k) c[k] = Scalar(dist(rng));
  return Element<Scalar>(algebra, std::move(c));
}

template <typename Scalar, typename Rng>
Element<Scalar> random_nonzero_element(const Algebra<Scalar>& algebra, Rng& rng, int lo = -3,
                                       int hi = 3) {
  for (;;) {
    auto x = random_element(algebra, rng, lo, hi);
    if (!x.is_zero()) return x;
  }
}

namespace detail {

template <typename Scalar>
void verify_sedenion_convention(const Algebra<Scalar>& algebra) {
  if (algebra.depth() != 4) return;
  for (const auto& g : algebra.gammas()) {
    if (g != Scalar(-1)) return;
  }
  const auto alpha = algebra.basis(1) + algebra.basis(10);
  const auto beta = algebra.basis(7) + algebra.basis(12);
  if (!mul(alpha, beta).is_zero() || !mul(beta, alpha).is_zero()) {
    throw std::logic_error(
        "sedenion basis convention drifted: (e1+e10)(e7+e12) must vanish");
  }
}

}  // namespace detail

}  // namespace cdalg

#endif  // CDALG_ALGEBRA_HPP
