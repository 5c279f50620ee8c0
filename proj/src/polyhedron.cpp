#include "mixednewton/polyhedron.hpp"

#include <algorithm>
#include <map>

namespace mixednewton {

namespace {

std::vector<Int> to_key(const IntVec& v) { return {v.data(), v.data() + v.size()}; }

void require_nonzero(const MixedPolynomial& f, const char* op) {
  if (f.is_zero()) throw DomainError(std::string(op) + ": zero polynomial");
}

void require_radial(const WeightVector& P, const MixedPolynomial& f, const char* op) {
  if (P.role != WeightRole::radial) throw DomainError(std::string(op) + ": radial weight required");
  if (P.dim() != f.nvars()) throw DomainError(std::string(op) + ": weight dimension mismatch");
}

// Affine dimension of a point set, exactly.
int affine_dim(const std::vector<IntVec>& pts) {
  if (pts.size() <= 1) return 0;
  IntMat D(static_cast<Eigen::Index>(pts.size() - 1), pts[0].size());
  for (size_t i = 1; i < pts.size(); ++i) D.row(static_cast<Eigen::Index>(i - 1)) = (pts[i] - pts[0]).transpose();
  return static_cast<int>(rank_exact(D));
}

}  // namespace

SupportSet support(const MixedPolynomial& f) {
  require_nonzero(f, "support");
  std::map<std::vector<Int>, std::vector<int>> pts;
  for (size_t i = 0; i < f.terms().size(); ++i) {
    const MixedTerm& t = f.terms()[i];
    pts[to_key(t.nu + t.mu)].push_back(static_cast<int>(i));
  }
  SupportSet s;
  s.nvars = f.nvars();
  for (auto& [key, idx] : pts) {
    SupportPoint p;
    p.point = Eigen::Map<const IntVec>(key.data(), static_cast<Eigen::Index>(key.size()));
    p.term_indices = std::move(idx);
    s.points.push_back(std::move(p));
  }
  return s;
}

Int min_value(const MixedPolynomial& f, const WeightVector& P) {
  require_nonzero(f, "min_value");
  require_radial(P, f, "min_value");
  SupportSet s = support(f);
  Int best = dot(P.entries, s.points.front().point);
  for (const SupportPoint& p : s.points) best = std::min(best, dot(P.entries, p.point));
  return best;
}

Face face_of(const MixedPolynomial& f, const WeightVector& P) {
  require_nonzero(f, "face_of");
  require_radial(P, f, "face_of");
  SupportSet s = support(f);
  Int d = dot(P.entries, s.points.front().point);
  for (const SupportPoint& p : s.points) d = std::min(d, dot(P.entries, p.point));
  Face face{P, d, {}, {}, 0, P.strictly_positive()};
  for (const SupportPoint& p : s.points) {
    if (dot(P.entries, p.point) != d) continue;
    face.points.push_back(p.point);
    face.term_indices.insert(face.term_indices.end(), p.term_indices.begin(),
                             p.term_indices.end());
  }
  std::sort(face.term_indices.begin(), face.term_indices.end());
  face.dim = affine_dim(face.points);
  return face;
}

MixedPolynomial face_function(const MixedPolynomial& f, const Face& face) {
  if (face.defining_weight.dim() != f.nvars())
    throw DomainError("face_function: face does not match the polynomial");
  Face check = face_of(f, face.defining_weight);
  if (check.d != face.d || check.term_indices != face.term_indices)
    throw DomainError("face_function: face was not produced from this polynomial");
  std::vector<MixedTerm> ts;
  for (int i : face.term_indices) ts.push_back(f.terms()[static_cast<size_t>(i)]);
  return MixedPolynomial::from_terms(f.nvars(), std::move(ts));
}

NewtonPolyhedron2 hull_2d(const MixedPolynomial& f) {
  require_nonzero(f, "hull_2d");
  if (f.nvars() != 2) throw DomainError("hull_2d: two-variable polynomials only");
  NewtonPolyhedron2 np;
  np.supp = support(f);

  // Pareto-minimal support points: nothing both left of and below them.
  std::vector<IntVec> pts;
  for (const SupportPoint& p : np.supp.points) pts.push_back(p.point);
  std::sort(pts.begin(), pts.end(), [](const IntVec& a, const IntVec& b) {
    return a(0) != b(0) ? a(0) < b(0) : a(1) < b(1);
  });
  std::vector<IntVec> pareto;
  Int best_y = std::numeric_limits<Int>::max();
  for (const IntVec& p : pts) {
    if (!pareto.empty() && pareto.back()(0) == p(0)) continue;  // keep the lower y
    if (p(1) >= best_y) continue;                               // dominated
    pareto.push_back(p);
    best_y = p(1);
  }

  // Monotone-chain lower hull of the Pareto staircase; right turns only.
  std::vector<IntVec> hull;
  for (const IntVec& p : pareto) {
    while (hull.size() >= 2) {
      const IntVec &a = hull[hull.size() - 2], &b = hull.back();
      Int cross = (b(0) - a(0)) * (p(1) - a(1)) - (b(1) - a(1)) * (p(0) - a(0));
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  np.vertices = hull;

  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    const IntVec &a = hull[i], &b = hull[i + 1];
    IntVec normal(2);
    normal << a(1) - b(1), b(0) - a(0);
    normal = primitive(normal);
    HullEdge e{a, b, normal, normal(0) * a(0) + normal(1) * a(1)};
    np.edges.push_back(std::move(e));
  }
  return np;
}

namespace {

Face face_from_weight(const MixedPolynomial& f, IntVec w) {
  return face_of(f, WeightVector(std::move(w), WeightRole::radial));
}

Int spread(const SupportSet& s) {
  Int lo0 = s.points.front().point(0), hi0 = lo0;
  Int lo1 = s.points.front().point(1), hi1 = lo1;
  for (const SupportPoint& p : s.points) {
    lo0 = std::min(lo0, p.point(0));
    hi0 = std::max(hi0, p.point(0));
    lo1 = std::min(lo1, p.point(1));
    hi1 = std::max(hi1, p.point(1));
  }
  return std::max(hi0 - lo0, hi1 - lo1);
}

}  // namespace

std::vector<Face> compact_faces_2d(const MixedPolynomial& f) {
  NewtonPolyhedron2 np = hull_2d(f);
  std::vector<Face> faces;
  for (size_t i = 0; i < np.vertices.size(); ++i) {
    IntVec w;
    if (np.vertices.size() == 1) {
      w = IntVec::Constant(2, 1);
    } else if (i == 0) {
      w = IntVec(2);
      w << 1 + spread(np.supp), 1;
    } else if (i + 1 == np.vertices.size()) {
      w = IntVec(2);
      w << 1, 1 + spread(np.supp);
    } else {
      w = primitive(np.edges[i - 1].normal + np.edges[i].normal);
    }
    Face v = face_from_weight(f, std::move(w));
    faces.push_back(std::move(v));
  }
  for (const HullEdge& e : np.edges) faces.push_back(face_from_weight(f, e.normal));
  return faces;
}

WeightVector vertex_weight(const MixedPolynomial& f, const Face& vertex) {
  if (f.nvars() != 2) throw DomainError("vertex_weight: two-variable polynomials only");
  if (vertex.dim != 0 || vertex.points.size() != 1)
    throw DomainError("vertex_weight: not a vertex face");
  std::vector<Face> faces = compact_faces_2d(f);
  for (const Face& c : faces) {
    if (c.dim != 0) continue;
    if (c.points[0] == vertex.points[0]) return c.defining_weight;
  }
  throw DomainError("vertex_weight: the point is not a hull vertex of this polynomial");
}

}  // namespace mixednewton
