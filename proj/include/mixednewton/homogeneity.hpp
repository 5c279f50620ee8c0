#pragma once

#include <optional>
#include <vector>

#include "mixednewton/polyhedron.hpp"

namespace mixednewton {

/// Radial degree of f with respect to P when P·(nu+mu) is one positive
/// integer across all terms; nullopt otherwise. P must be a radial weight.
std::optional<Int> is_radially_wh(const MixedPolynomial& f, const WeightVector& P);

/// Polar degree of f with respect to Q when Q·(nu-mu) is constant across all
/// terms (any integer, zero included); nullopt otherwise.
std::optional<Int> is_polar_wh(const MixedPolynomial& f, const WeightVector& Q);

/// Lattice of all integer weights making f radially weighted homogeneous,
/// plus a strictly positive witness of positive degree when one exists
/// (decided exactly over the rationals).
struct RadialSolve {
  IntMat kernel_basis;  // canonical HNF rows
  std::optional<IntVec> witness;
  std::optional<Int> degree;  // degree of the witness
};

RadialSolve solve_radial_weights(const MixedPolynomial& f);

/// Lattice of all integer weights making f polar weighted homogeneous, with
/// the degree of each basis vector. The degree is linear on the lattice, so
/// a nonzero degree exists iff some basis vector has one.
struct PolarSolve {
  IntMat kernel_basis;
  std::vector<Int> degrees;
  bool nonzero_degree_exists = false;
};

PolarSolve solve_polar_weights(const MixedPolynomial& f);

/// The homogeneity ladder, ordered: each rung implies the ones below it.
enum class Ladder {
  none,
  radial_only,
  polar_only,
  mixed_wh,
  strongly_mixed_wh,
  strongly_polar_positive,
};

const char* to_string(Ladder l);

struct HomogeneityReport {
  RadialSolve radial;
  PolarSolve polar;
  /// Strictly positive weight that is simultaneously radial (positive degree)
  /// and polar, when one exists; with its two degrees.
  std::optional<IntVec> strong_witness;
  std::optional<Int> strong_dr, strong_dp;
  /// As above but with the polar degree additionally positive.
  std::optional<IntVec> polar_positive_witness;
  std::optional<Int> polar_positive_dr, polar_positive_dp;
  Ladder ladder = Ladder::none;
};

/// Maximal true rung of the ladder, with the witnesses that establish it.
HomogeneityReport classify(const MixedPolynomial& f);

struct FaceTypeEntry {
  Face face;
  HomogeneityReport homog;
  bool mixed_wh = false;
  /// Strictly positive weight defining this face for which the face function
  /// is simultaneously radially and polar homogeneous with positive polar
  /// degree (searched exactly over the face's normal cone).
  std::optional<IntVec> polar_positive_weight;
  std::optional<Int> polar_positive_dr, polar_positive_dp;
};

struct FaceTypeReport {
  std::vector<FaceTypeEntry> faces;
  bool mixed_wh_face_type = false;
  bool strongly_polar_positive_face_type = false;
};

/// Per-compact-face homogeneity classification (two variables only).
FaceTypeReport face_type(const MixedPolynomial& f);

}  // namespace mixednewton
