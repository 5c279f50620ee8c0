#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

#include "mixednewton/rational.hpp"

namespace mixednewton {

using Int = std::int64_t;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using BigIntVec = Eigen::Matrix<BigInt, Eigen::Dynamic, 1>;
using BigIntMat = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using BigRatVec = Eigen::Matrix<BigRat, Eigen::Dynamic, 1>;
using BigRatMat = Eigen::Matrix<BigRat, Eigen::Dynamic, Eigen::Dynamic>;

Int dot(const IntVec& a, const IntVec& b);

/// Divides by the gcd of the entries (zero vector is returned unchanged).
IntVec primitive(const IntVec& v);

/// Scales so the first nonzero entry is positive.
IntVec sign_normalized(IntVec v);

/// Canonical basis (as rows, in Hermite normal form with positive pivots and
/// entries above each pivot reduced into [0, pivot)) of the lattice
/// { x in Z^n : D x = 0 }.  The returned matrix has n columns; zero rows means
/// the kernel is trivial.  Kernels of integer matrices are saturated, so a
/// rank-one kernel always has a primitive generator.
IntMat integer_kernel_basis(const IntMat& D);

/// Row-HNF canonical form of the lattice spanned by the rows.
IntMat hermite_row_basis(const IntMat& rows);

/// Membership of v in the lattice spanned by HNF rows.
bool in_lattice(const IntMat& hnf_rows, const IntVec& v);

/// Exact rank over Q.
Eigen::Index rank_exact(const IntMat& M);

/// Exact feasibility of the homogeneous strict system  M x > 0  (componentwise)
/// by Fourier–Motzkin elimination; returns a rational interior point when one
/// exists.  Feasible open cones contain rational points, so exactness is total.
std::optional<BigRatVec> strict_feasible_point(const BigRatMat& M);

/// Clears denominators and divides by the gcd: the primitive integer vector
/// with the same direction.  The zero vector maps to itself.
IntVec rational_to_primitive_int(const BigRatVec& x);

/// Searches the lattice spanned by basis_rows for a strictly positive vector P
/// additionally satisfying f·P > 0 for every functional f in extra_strict.
/// Returns a primitive such vector, or nullopt when the open cone misses the
/// rational span of the lattice (decided exactly).
std::optional<IntVec> positive_lattice_vector(const IntMat& basis_rows,
                                              const std::vector<IntVec>& extra_strict = {});

}  // namespace mixednewton
