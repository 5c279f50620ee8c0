#pragma once

#include <string>
#include <vector>

#include "mixednewton/mixed_polynomial.hpp"

namespace mixednewton {

enum class WeightRole { radial, polar };

/// An integer weight vector. Radial weights are componentwise nonnegative;
/// polar weights may have negative entries. Never the zero vector.
/// Strict positivity is derived from the entries, never stored.
struct WeightVector {
  IntVec entries;
  WeightRole role;

  WeightVector(IntVec e, WeightRole r) : entries(std::move(e)), role(r) {
    if (entries.size() == 0 || entries.isZero()) throw DomainError("weight vector must be nonzero");
    if (role == WeightRole::radial)
      for (Eigen::Index i = 0; i < entries.size(); ++i)
        if (entries(i) < 0) throw DomainError("radial weight vector has a negative entry");
  }

  bool strictly_positive() const {
    for (Eigen::Index i = 0; i < entries.size(); ++i)
      if (entries(i) <= 0) return false;
    return true;
  }
  Eigen::Index dim() const { return entries.size(); }
};

/// A support point nu + mu together with the (canonical-order) indices of the
/// terms mapping to it; distinct terms may share a point.
struct SupportPoint {
  IntVec point;
  std::vector<int> term_indices;
};

/// The support of f: the distinct points nu + mu, sorted lexicographically.
struct SupportSet {
  int nvars = 0;
  std::vector<SupportPoint> points;
};

SupportSet support(const MixedPolynomial& f);

/// Minimum of the linear function P over the Newton polyhedron of f; attained
/// on support points because P is componentwise nonnegative.
Int min_value(const MixedPolynomial& f, const WeightVector& P);

/// A face of the Newton polyhedron: the argmin support points of a weight.
/// Compact exactly when some strictly positive weight defines it; faces
/// produced by non-strictly-positive weights are flagged non-compact.
struct Face {
  WeightVector defining_weight;
  Int d = 0;
  std::vector<IntVec> points;
  std::vector<int> term_indices;
  int dim = 0;
  bool compact = false;
};

Face face_of(const MixedPolynomial& f, const WeightVector& P);

/// Sum of exactly the terms whose nu + mu lies on the face. Radially weighted
/// homogeneous of degree face.d with respect to the defining weight.
MixedPolynomial face_function(const MixedPolynomial& f, const Face& face);

/// One slanted edge of the 2-D staircase, from the higher-y endpoint to the
/// lower-y endpoint, with its primitive inward normal and minimum value.
struct HullEdge {
  IntVec from;
  IntVec to;
  IntVec normal;
  Int d = 0;
};

/// Lower-left staircase hull of a two-variable polynomial.
struct NewtonPolyhedron2 {
  SupportSet supp;
  std::vector<IntVec> vertices;  // x ascending, y descending
  std::vector<HullEdge> edges;   // normals strictly ordered by slope
};

NewtonPolyhedron2 hull_2d(const MixedPolynomial& f);

/// All compact faces of a two-variable polynomial: hull vertices (dim 0), in
/// staircase order, followed by the edges (dim 1). Every face carries a
/// strictly positive defining weight; vertex weights follow the documented
/// representative rule (see vertex_weight).
std::vector<Face> compact_faces_2d(const MixedPolynomial& f);

/// Canonical strictly positive weight isolating a hull vertex: the primitive
/// sum of the adjacent edge normals; the staircase endpoints use (M,1) /
/// (1,M) with M = 1 + the larger coordinate spread of the support.
WeightVector vertex_weight(const MixedPolynomial& f, const Face& vertex);

}  // namespace mixednewton
