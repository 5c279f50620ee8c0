#include "mixednewton/analysis.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace mixednewton {

namespace {

constexpr double kTiny = 1e-300;

void check_radial_precondition(const MixedPolynomial& f, const WeightVector& P, Int d_r) {
  auto d = is_radially_wh(f, P);
  if (!d || *d != d_r)
    throw PreconditionError("euler_radial: f is not radially homogeneous of this degree");
}

void check_polar_precondition(const MixedPolynomial& f, const WeightVector& Q, Int d_p) {
  auto d = is_polar_wh(f, Q);
  if (!d || *d != d_p)
    throw PreconditionError("euler_polar: f is not polar homogeneous of this degree");
}

// lhs = sum_j w_j (z_j df/dz_j + sgn * zbar_j df/dzbar_j), rhs = d f(z).
template <class Point, class Scalar>
void euler_sides(const MixedPolynomial& f, const IntVec& w, Int d, int sgn, const Point& z,
                 Scalar& lhs, Scalar& rhs) {
  lhs = Scalar(0);
  for (int j = 0; j < f.nvars(); ++j) {
    if (w(j) == 0) continue;
    Scalar zj(z[j]);
    Scalar a = zj * evaluate(wirtinger_dz(f, j), z);
    Scalar b = detail::conj_value(zj) * evaluate(wirtinger_dzbar(f, j), z);
    Scalar contrib = sgn > 0 ? a + b : a - b;
    Scalar weight = [&]() -> Scalar {
      if constexpr (std::is_same_v<Scalar, GaussianRational>)
        return GaussianRational(BigRat(w(j)));
      else
        return Scalar(static_cast<double>(w(j)));
    }();
    lhs += weight * contrib;
  }
  Scalar degree = [&]() -> Scalar {
    if constexpr (std::is_same_v<Scalar, GaussianRational>)
      return GaussianRational(BigRat(d));
    else
      return Scalar(static_cast<double>(d));
  }();
  rhs = degree * evaluate(f, z);
}

EulerCheck euler_exact(const MixedPolynomial& f, const IntVec& w, Int d, int sgn,
                       const ExactPoint& z, EulerCheck::Kind kind) {
  EulerCheck c;
  c.kind = kind;
  c.exact_mode = true;
  GaussianRational lhs, rhs;
  euler_sides(f, w, d, sgn, z, lhs, rhs);
  c.exact_equal = lhs == rhs;
  c.lhs = lhs.to_complex();
  c.rhs = rhs.to_complex();
  c.residual = c.exact_equal ? 0.0 : std::abs(c.lhs - c.rhs);
  return c;
}

EulerCheck euler_float(const MixedPolynomial& f, const IntVec& w, Int d, int sgn,
                       const Eigen::VectorXcd& z, EulerCheck::Kind kind) {
  EulerCheck c;
  c.kind = kind;
  std::complex<double> lhs, rhs;
  euler_sides(f, w, d, sgn, z, lhs, rhs);
  c.lhs = lhs;
  c.rhs = rhs;
  double scale = std::max({std::abs(lhs), std::abs(rhs), kTiny});
  c.residual = std::abs(lhs - rhs) / scale;
  c.exact_equal = lhs == rhs;
  return c;
}

}  // namespace

EulerCheck euler_radial(const MixedPolynomial& f, const WeightVector& P, Int d_r,
                        const ExactPoint& z) {
  check_radial_precondition(f, P, d_r);
  return euler_exact(f, P.entries, d_r, +1, z, EulerCheck::Kind::radial);
}

EulerCheck euler_radial(const MixedPolynomial& f, const WeightVector& P, Int d_r,
                        const Eigen::VectorXcd& z) {
  check_radial_precondition(f, P, d_r);
  return euler_float(f, P.entries, d_r, +1, z, EulerCheck::Kind::radial);
}

EulerCheck euler_polar(const MixedPolynomial& f, const WeightVector& Q, Int d_p,
                       const ExactPoint& z) {
  check_polar_precondition(f, Q, d_p);
  return euler_exact(f, Q.entries, d_p, -1, z, EulerCheck::Kind::polar);
}

EulerCheck euler_polar(const MixedPolynomial& f, const WeightVector& Q, Int d_p,
                       const Eigen::VectorXcd& z) {
  check_polar_precondition(f, Q, d_p);
  return euler_float(f, Q.entries, d_p, -1, z, EulerCheck::Kind::polar);
}

double radial_action_check(const MixedPolynomial& f, const WeightVector& P, Int d_r, double t,
                           const Eigen::VectorXcd& z) {
  if (!(t > 0)) throw DomainError("radial_action_check: t must be positive");
  if (P.dim() != f.nvars() || z.size() != f.nvars())
    throw DomainError("radial_action_check: dimension mismatch");
  Eigen::VectorXcd tz(z.size());
  for (int j = 0; j < f.nvars(); ++j) tz(j) = std::pow(t, static_cast<double>(P.entries(j))) * z(j);
  std::complex<double> lhs = evaluate(f, tz);
  std::complex<double> rhs = std::pow(t, static_cast<double>(d_r)) * evaluate(f, z);
  double scale = std::max(std::pow(t, static_cast<double>(d_r)) * term_magnitude_sum(f, z), kTiny);
  return std::abs(lhs - rhs) / scale;
}

double polar_action_check(const MixedPolynomial& f, const WeightVector& Q, Int d_p, double theta,
                          const Eigen::VectorXcd& z) {
  if (Q.dim() != f.nvars() || z.size() != f.nvars())
    throw DomainError("polar_action_check: dimension mismatch");
  const std::complex<double> I(0, 1);
  Eigen::VectorXcd tz(z.size());
  for (int j = 0; j < f.nvars(); ++j)
    tz(j) = std::exp(I * (static_cast<double>(Q.entries(j)) * theta)) * z(j);
  std::complex<double> lhs = evaluate(f, tz);
  std::complex<double> rhs = std::exp(I * (static_cast<double>(d_p) * theta)) * evaluate(f, z);
  double scale = std::max(term_magnitude_sum(f, z), kTiny);
  return std::abs(lhs - rhs) / scale;
}

OkaResidual oka_residual(const MixedPolynomial& f, const Eigen::VectorXcd& z) {
  if (f.is_zero()) throw DomainError("oka_residual: zero polynomial");
  if (z.size() != f.nvars()) throw DomainError("oka_residual: dimension mismatch");
  OkaResidual r;
  r.a.resize(f.nvars());
  r.b.resize(f.nvars());
  for (int j = 0; j < f.nvars(); ++j) {
    r.a(j) = std::conj(evaluate(wirtinger_dz(f, j), z));
    r.b(j) = evaluate(wirtinger_dzbar(f, j), z);
  }
  double na2 = 0, nb2 = 0;
  std::complex<double> s(0, 0);
  for (int j = 0; j < f.nvars(); ++j) {
    na2 += std::norm(r.a(j));
    nb2 += std::norm(r.b(j));
    s += r.a(j) * std::conj(r.b(j));
  }
  double val = na2 + nb2 - 2.0 * std::abs(s);
  r.residual = std::sqrt(std::max(0.0, val));
  if (std::abs(s) > 0) r.best_alpha = s / std::abs(s);
  return r;
}

ReachResult reach_target(const MixedPolynomial& f, const WeightVector& P, Int d_r,
                         const WeightVector& Q, Int d_p, const Eigen::VectorXcd& z0,
                         std::complex<double> w) {
  if (d_r <= 0) throw PreconditionError("reach_target: radial degree must be positive");
  if (d_p == 0) throw PreconditionError("reach_target: polar degree must be nonzero");
  check_radial_precondition(f, P, d_r);
  check_polar_precondition(f, Q, d_p);
  if (w == std::complex<double>(0, 0)) throw DomainError("reach_target: zero target");
  std::complex<double> w0 = evaluate(f, z0);
  if (w0 == std::complex<double>(0, 0)) throw DomainError("reach_target: witness value is zero");

  double t = std::pow(std::abs(w) / std::abs(w0), 1.0 / static_cast<double>(d_r));
  double theta = (std::arg(w) - std::arg(w0)) / static_cast<double>(d_p);
  const std::complex<double> I(0, 1);
  ReachResult res;
  res.point.resize(z0.size());
  for (int j = 0; j < f.nvars(); ++j)
    res.point(j) = std::pow(t, static_cast<double>(P.entries(j))) *
                   std::exp(I * (static_cast<double>(Q.entries(j)) * theta)) * z0(j);
  res.achieved = evaluate(f, res.point);
  res.rel_error = std::abs(res.achieved - w) / std::abs(w);
  return res;
}

Eigen::VectorXcd holomorphic_zero_witness(const MixedPolynomial& f) {
  if (f.nvars() != 2) throw DomainError("holomorphic_zero_witness: two variables only");
  if (f.is_zero()) throw DomainError("holomorphic_zero_witness: zero polynomial");
  for (const MixedTerm& t : f.terms())
    if (!t.mu.isZero()) throw DomainError("holomorphic_zero_witness: f must be holomorphic");
  if (f.terms().size() < 2)
    throw DomainError("holomorphic_zero_witness: a single monomial has no torus zero");
  auto radial = solve_radial_weights(f);
  if (!radial.witness)
    throw PreconditionError("holomorphic_zero_witness: f is not weighted homogeneous");

  // Substitute z2 = 1: coefficients of the univariate polynomial in z1.
  // Weighted homogeneity makes the z1-exponents pairwise distinct.
  Int lo = f.terms().front().nu(0), hi = lo;
  for (const MixedTerm& t : f.terms()) {
    lo = std::min(lo, t.nu(0));
    hi = std::max(hi, t.nu(0));
  }
  const Int deg = hi - lo;  // >= 1: at least two monomials
  std::vector<std::complex<double>> coeff(static_cast<size_t>(deg + 1), {0, 0});
  for (const MixedTerm& t : f.terms())
    coeff[static_cast<size_t>(t.nu(0) - lo)] = t.coeff.to_complex();

  // Companion matrix of the monic residual polynomial.
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
  for (Int i = 0; i + 1 < deg; ++i) C(i + 1, i) = 1.0;
  for (Int i = 0; i < deg; ++i)
    C(i, deg - 1) = -coeff[static_cast<size_t>(i)] / coeff[static_cast<size_t>(deg)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);

  auto eval_poly = [&](std::complex<double> x, std::complex<double>& p, std::complex<double>& dp) {
    p = {0, 0};
    dp = {0, 0};
    for (Int i = deg; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + coeff[static_cast<size_t>(i)];
    }
  };

  std::complex<double> best_root(0, 0);
  double best_abs = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    std::complex<double> r = es.eigenvalues()(k);
    for (int it = 0; it < 50; ++it) {
      std::complex<double> p, dp;
      eval_poly(r, p, dp);
      if (std::abs(p) == 0 || std::abs(dp) == 0) break;
      std::complex<double> step = p / dp;
      r -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(r))) break;
    }
    std::complex<double> p, dp;
    eval_poly(r, p, dp);
    double quality = std::abs(p);
    if (std::abs(r) > 0 &&
        (quality < best_abs ||
         (quality == best_abs && (r.real() < best_root.real() ||
                                  (r.real() == best_root.real() && r.imag() < best_root.imag()))))) {
      best_abs = quality;
      best_root = r;
    }
  }
  if (!(best_abs < std::numeric_limits<double>::infinity()))
    throw Error("holomorphic_zero_witness: root solve failed");
  Eigen::VectorXcd z(2);
  z << best_root, std::complex<double>(1, 0);
  return z;
}

}  // namespace mixednewton
