#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "mixednewton/lattice.hpp"
#include "mixednewton/rational.hpp"

namespace mixednewton {

/// One monomial c * z^nu * conj(z)^mu. Exponent vectors have one entry per
/// ambient variable; entries are nonnegative.
struct MixedTerm {
  GaussianRational coeff;
  IntVec nu;
  IntVec mu;
};

/// A finite sum of mixed monomials in canonical form: no zero coefficients,
/// all (nu, mu) pairs distinct, terms ordered lexicographically on the
/// concatenated exponent vector (nu, mu). The zero polynomial has no terms.
class MixedPolynomial {
 public:
  explicit MixedPolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw DomainError("a mixed polynomial needs at least one variable");
  }

  /// Canonicalizes: merges like terms, drops zero coefficients, sorts.
  static MixedPolynomial from_terms(int nvars, std::vector<MixedTerm> terms);

  int nvars() const { return nvars_; }
  const std::vector<MixedTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// True when some term has nu = mu = 0 (so f(0) != 0).
  bool has_constant_term() const;

  friend bool operator==(const MixedPolynomial& a, const MixedPolynomial& b);
  friend bool operator!=(const MixedPolynomial& a, const MixedPolynomial& b) { return !(a == b); }

 private:
  int nvars_;
  std::vector<MixedTerm> terms_;
};

MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b);
MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b);
MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b);
MixedPolynomial operator*(const GaussianRational& c, const MixedPolynomial& f);

/// Term-wise holomorphic partial d/dz_j (variable index 0-based).
/// Terms without a z_j factor vanish; coefficients stay exact.
MixedPolynomial wirtinger_dz(const MixedPolynomial& f, int j);

/// Term-wise antiholomorphic partial d/dzbar_j (0-based).
MixedPolynomial wirtinger_dzbar(const MixedPolynomial& f, int j);

/// Restriction to the coordinate subspace { z_j = 0 for j outside axes }:
/// keeps exactly the terms with nu_j = mu_j = 0 for every dropped axis.
/// Axes are 0-based and must be nonempty.
MixedPolynomial restrict_to(const MixedPolynomial& f, const std::vector<int>& axes);

/// Swaps every term's (nu, mu) and conjugates its coefficient. Evaluating the
/// result equals conjugating the original's value at the same point.
MixedPolynomial conj_swap(const MixedPolynomial& f);

/// Exact test for f(z) real for all z, i.e. f == conj_swap(f).
bool is_real_valued(const MixedPolynomial& f);

struct ConvenienceReport {
  bool convenient = false;
  /// Per axis, the index of a witness term supported on that axis alone
  /// (nu_i + mu_i > 0); nullopt when the axis has none.
  std::vector<std::optional<int>> axis_witness;
};

/// An axis-pure term of positive degree on every coordinate axis.
ConvenienceReport is_convenient(const MixedPolynomial& f);

namespace detail {
inline std::complex<double> conj_value(const std::complex<double>& z) { return std::conj(z); }
inline GaussianRational conj_value(const GaussianRational& z) { return conj(z); }
}  // namespace detail

/// Evaluates f at a point given as any indexable container of scalars
/// (Eigen::VectorXcd for floating evaluation, std::vector<GaussianRational>
/// for exact evaluation). Conjugation is exact in the rational case.
template <class PointVec>
auto evaluate(const MixedPolynomial& f, const PointVec& z) {
  using Scalar = std::decay_t<decltype(z[0])>;
  if (static_cast<int>(z.size()) != f.nvars())
    throw DomainError("evaluate: point dimension does not match the polynomial");
  Scalar acc(0);
  for (const MixedTerm& t : f.terms()) {
    Scalar v = [&]() -> Scalar {
      if constexpr (std::is_same_v<Scalar, GaussianRational>)
        return t.coeff;
      else
        return Scalar(t.coeff.to_complex());
    }();
    for (int j = 0; j < f.nvars(); ++j) {
      if (t.nu(j) > 0) v *= pow_nonneg(Scalar(z[j]), t.nu(j));
      if (t.mu(j) > 0) v *= pow_nonneg(detail::conj_value(Scalar(z[j])), t.mu(j));
    }
    acc += v;
  }
  return acc;
}

/// Per-term values at z, in canonical term order. The sum of their magnitudes
/// is the natural scale for relative zero tests.
std::vector<std::complex<double>> evaluate_terms(const MixedPolynomial& f,
                                                 const Eigen::VectorXcd& z);

/// Sum of |term value| at z.
double term_magnitude_sum(const MixedPolynomial& f, const Eigen::VectorXcd& z);

}  // namespace mixednewton
