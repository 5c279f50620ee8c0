#pragma once

#include <Eigen/Core>

#include <complex>
#include <optional>

#include "mixednewton/homogeneity.hpp"

namespace mixednewton {

using ExactPoint = std::vector<GaussianRational>;

/// One verification of a degree identity at a point. Exact mode (rational
/// points) asserts equality of GaussianRationals; floating mode reports the
/// residual relative to the magnitude of both sides.
struct EulerCheck {
  enum class Kind { radial, polar } kind;
  bool exact_mode = false;
  bool exact_equal = false;
  std::complex<double> lhs{}, rhs{};
  double residual = 0.0;  // 0 in exact mode when equal
};

/// sum_j p_j (z_j df/dz_j + zbar_j df/dzbar_j) against d_r f(z).
/// Requires is_radially_wh(f, P) == d_r (violations are reported as errors).
EulerCheck euler_radial(const MixedPolynomial& f, const WeightVector& P, Int d_r,
                        const ExactPoint& z);
EulerCheck euler_radial(const MixedPolynomial& f, const WeightVector& P, Int d_r,
                        const Eigen::VectorXcd& z);

/// sum_j q_j (z_j df/dz_j - zbar_j df/dzbar_j) against d_p f(z).
EulerCheck euler_polar(const MixedPolynomial& f, const WeightVector& Q, Int d_p,
                       const ExactPoint& z);
EulerCheck euler_polar(const MixedPolynomial& f, const WeightVector& Q, Int d_p,
                       const Eigen::VectorXcd& z);

/// Relative residual of f(t∘z) = t^{d_r} f(z) for the scaling action
/// t∘z = (t^{p_1} z_1, ..., t^{p_n} z_n), t > 0.
double radial_action_check(const MixedPolynomial& f, const WeightVector& P, Int d_r, double t,
                           const Eigen::VectorXcd& z);

/// Relative residual of f(θ∘z) = e^{i d_p θ} f(z) for the phase action
/// θ∘z = (e^{i q_1 θ} z_1, ...).
double polar_action_check(const MixedPolynomial& f, const WeightVector& Q, Int d_p, double theta,
                          const Eigen::VectorXcd& z);

/// Distance of a point from being mixed critical: a_j = conj(df/dz_j),
/// b_j = df/dzbar_j, residual = min over |alpha| = 1 of ||a - alpha b||,
/// computed in closed form. Zero exactly at mixed critical points.
struct OkaResidual {
  Eigen::VectorXcd a;
  Eigen::VectorXcd b;
  double residual = 0.0;
  std::optional<std::complex<double>> best_alpha;
};

OkaResidual oka_residual(const MixedPolynomial& f, const Eigen::VectorXcd& z);

/// Moves a witness value along the two torus actions onto a target:
/// t = (|w|/|w0|)^{1/d_r}, θ = (arg w - arg w0)/d_p, z = t∘(θ∘z0).
/// Requires d_r > 0, d_p != 0, f(z0) != 0, w != 0.
struct ReachResult {
  Eigen::VectorXcd point;
  std::complex<double> achieved;
  double rel_error = 0.0;
};

ReachResult reach_target(const MixedPolynomial& f, const WeightVector& P, Int d_r,
                         const WeightVector& Q, Int d_p, const Eigen::VectorXcd& z0,
                         std::complex<double> w);

/// A point of the two-variable torus where a holomorphic weighted homogeneous
/// polynomial with at least two monomials vanishes: substitutes z2 = 1,
/// strips the z1 power, and solves the residual univariate polynomial by
/// companion-matrix eigenvalues with Newton polishing.
Eigen::VectorXcd holomorphic_zero_witness(const MixedPolynomial& f);

}  // namespace mixednewton
