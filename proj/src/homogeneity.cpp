#include "mixednewton/homogeneity.hpp"

#include <algorithm>

namespace mixednewton {

namespace {

void require_nonzero(const MixedPolynomial& f, const char* op) {
  if (f.is_zero()) throw DomainError(std::string(op) + ": zero polynomial");
}

IntVec radial_exponent(const MixedTerm& t) { return t.nu + t.mu; }
IntVec polar_exponent(const MixedTerm& t) { return t.nu - t.mu; }

// Rows e(term_i) - e(term_0) for i >= 1; the kernel of this matrix is the set
// of weights making e(.)·P constant across terms.
template <class ExpFn>
IntMat difference_matrix(const MixedPolynomial& f, ExpFn e) {
  const auto& ts = f.terms();
  IntMat D(static_cast<Eigen::Index>(ts.size() > 0 ? ts.size() - 1 : 0), f.nvars());
  for (size_t i = 1; i < ts.size(); ++i)
    D.row(static_cast<Eigen::Index>(i - 1)) = (e(ts[i]) - e(ts[0])).transpose();
  return D;
}

template <class ExpFn>
std::optional<Int> common_degree(const MixedPolynomial& f, const IntVec& w, ExpFn e) {
  Int d = dot(w, e(f.terms().front()));
  for (const MixedTerm& t : f.terms())
    if (dot(w, e(t)) != d) return std::nullopt;
  return d;
}

}  // namespace

std::optional<Int> is_radially_wh(const MixedPolynomial& f, const WeightVector& P) {
  require_nonzero(f, "is_radially_wh");
  if (P.role != WeightRole::radial) throw DomainError("is_radially_wh: radial weight required");
  if (P.dim() != f.nvars()) throw DomainError("is_radially_wh: weight dimension mismatch");
  auto d = common_degree(f, P.entries, radial_exponent);
  if (d && *d > 0) return d;
  return std::nullopt;
}

std::optional<Int> is_polar_wh(const MixedPolynomial& f, const WeightVector& Q) {
  require_nonzero(f, "is_polar_wh");
  if (Q.dim() != f.nvars()) throw DomainError("is_polar_wh: weight dimension mismatch");
  return common_degree(f, Q.entries, polar_exponent);
}

RadialSolve solve_radial_weights(const MixedPolynomial& f) {
  require_nonzero(f, "solve_radial_weights");
  RadialSolve out;
  out.kernel_basis = integer_kernel_basis(difference_matrix(f, radial_exponent));
  if (out.kernel_basis.rows() > 0) {
    // Positive degree is one extra strict functional on top of positivity.
    IntVec deg = radial_exponent(f.terms().front());
    if (auto w = positive_lattice_vector(out.kernel_basis, {deg})) {
      out.witness = *w;
      out.degree = dot(*w, deg);
    }
  }
  return out;
}

PolarSolve solve_polar_weights(const MixedPolynomial& f) {
  require_nonzero(f, "solve_polar_weights");
  PolarSolve out;
  out.kernel_basis = integer_kernel_basis(difference_matrix(f, polar_exponent));
  IntVec deg = polar_exponent(f.terms().front());
  for (Eigen::Index i = 0; i < out.kernel_basis.rows(); ++i) {
    IntVec q = out.kernel_basis.row(i).transpose();
    out.degrees.push_back(dot(q, deg));
  }
  out.nonzero_degree_exists =
      std::any_of(out.degrees.begin(), out.degrees.end(), [](Int d) { return d != 0; });
  return out;
}

const char* to_string(Ladder l) {
  switch (l) {
    case Ladder::none: return "none";
    case Ladder::radial_only: return "radial_only";
    case Ladder::polar_only: return "polar_only";
    case Ladder::mixed_wh: return "mixed_wh";
    case Ladder::strongly_mixed_wh: return "strongly_mixed_wh";
    case Ladder::strongly_polar_positive: return "strongly_polar_positive";
  }
  return "unknown";
}

HomogeneityReport classify(const MixedPolynomial& f) {
  require_nonzero(f, "classify");
  HomogeneityReport rep;
  rep.radial = solve_radial_weights(f);
  rep.polar = solve_polar_weights(f);

  const bool radial = rep.radial.witness.has_value();
  const bool polar = rep.polar.kernel_basis.rows() > 0;

  if (radial && polar) {
    // A common weight must lie in both lattices: the kernel of the stacked
    // difference system.
    IntMat Dr = difference_matrix(f, radial_exponent);
    IntMat Dp = difference_matrix(f, polar_exponent);
    IntMat stacked(Dr.rows() + Dp.rows(), f.nvars());
    if (Dr.rows() > 0) stacked.topRows(Dr.rows()) = Dr;
    if (Dp.rows() > 0) stacked.bottomRows(Dp.rows()) = Dp;
    IntMat common = integer_kernel_basis(stacked);
    IntVec rdeg = radial_exponent(f.terms().front());
    IntVec pdeg = polar_exponent(f.terms().front());
    if (common.rows() > 0) {
      if (auto w = positive_lattice_vector(common, {rdeg})) {
        rep.strong_witness = *w;
        rep.strong_dr = dot(*w, rdeg);
        rep.strong_dp = dot(*w, pdeg);
      }
      if (auto w = positive_lattice_vector(common, {rdeg, pdeg})) {
        rep.polar_positive_witness = *w;
        rep.polar_positive_dr = dot(*w, rdeg);
        rep.polar_positive_dp = dot(*w, pdeg);
      }
    }
  }

  if (rep.polar_positive_witness)
    rep.ladder = Ladder::strongly_polar_positive;
  else if (rep.strong_witness)
    rep.ladder = Ladder::strongly_mixed_wh;
  else if (radial && polar)
    rep.ladder = Ladder::mixed_wh;
  else if (radial)
    rep.ladder = Ladder::radial_only;
  else if (polar)
    rep.ladder = Ladder::polar_only;
  else
    rep.ladder = Ladder::none;
  return rep;
}

FaceTypeReport face_type(const MixedPolynomial& f) {
  if (f.nvars() != 2) throw DomainError("face_type: two-variable polynomials only");
  require_nonzero(f, "face_type");
  FaceTypeReport rep;
  rep.mixed_wh_face_type = true;
  rep.strongly_polar_positive_face_type = true;

  SupportSet supp = support(f);
  for (const Face& face : compact_faces_2d(f)) {
    FaceTypeEntry entry;
    entry.face = face;
    MixedPolynomial fn = face_function(f, face);
    entry.homog = classify(fn);
    entry.mixed_wh = entry.homog.ladder >= Ladder::mixed_wh;

    // A strictly positive weight with this argmin face: multiples of the
    // primitive normal for an edge; the open normal cone for a vertex. The
    // weight must additionally make the face function polar homogeneous of
    // positive degree (it is radially homogeneous automatically).
    IntVec pdeg = polar_exponent(fn.terms().front());
    if (face.dim >= 1) {
      WeightVector n = face.defining_weight;
      auto dp = is_polar_wh(fn, WeightVector(n.entries, WeightRole::polar));
      if (dp && *dp > 0) {
        entry.polar_positive_weight = n.entries;
        entry.polar_positive_dr = face.d;
        entry.polar_positive_dp = *dp;
      }
    } else {
      IntMat Dp = difference_matrix(fn, polar_exponent);
      IntMat basis = integer_kernel_basis(Dp);
      std::vector<IntVec> strict;
      strict.push_back(pdeg);  // positive polar degree
      const IntVec& v = face.points.front();
      for (const SupportPoint& p : supp.points)
        if (p.point != v) strict.push_back(p.point - v);  // isolate the vertex
      strict.push_back(v);  // positive radial degree
      if (basis.rows() > 0) {
        if (auto w = positive_lattice_vector(basis, strict)) {
          entry.polar_positive_weight = *w;
          entry.polar_positive_dr = dot(*w, v);
          entry.polar_positive_dp = dot(*w, pdeg);
        }
      }
    }

    rep.mixed_wh_face_type = rep.mixed_wh_face_type && entry.mixed_wh;
    rep.strongly_polar_positive_face_type =
        rep.strongly_polar_positive_face_type && entry.polar_positive_weight.has_value();
    rep.faces.push_back(std::move(entry));
  }
  return rep;
}

}  // namespace mixednewton
