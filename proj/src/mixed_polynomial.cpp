#include "mixednewton/mixed_polynomial.hpp"

#include <algorithm>
#include <map>

namespace mixednewton {

namespace {

using Key = std::pair<std::vector<Int>, std::vector<Int>>;

Key key_of(const MixedTerm& t) {
  std::vector<Int> a(t.nu.data(), t.nu.data() + t.nu.size());
  std::vector<Int> b(t.mu.data(), t.mu.data() + t.mu.size());
  return {std::move(a), std::move(b)};
}

}  // namespace

MixedPolynomial MixedPolynomial::from_terms(int nvars, std::vector<MixedTerm> terms) {
  MixedPolynomial f(nvars);
  std::map<Key, GaussianRational> acc;
  for (MixedTerm& t : terms) {
    if (t.nu.size() != nvars || t.mu.size() != nvars)
      throw DomainError("term exponent vectors must have one entry per variable");
    for (Eigen::Index j = 0; j < t.nu.size(); ++j)
      if (t.nu(j) < 0 || t.mu(j) < 0) throw DomainError("negative exponent in a mixed term");
    acc[key_of(t)] += t.coeff;
  }
  for (auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    MixedTerm t;
    t.coeff = c;
    t.nu = Eigen::Map<const IntVec>(key.first.data(), nvars);
    t.mu = Eigen::Map<const IntVec>(key.second.data(), nvars);
    f.terms_.push_back(std::move(t));
  }
  return f;
}

bool MixedPolynomial::has_constant_term() const {
  for (const MixedTerm& t : terms_)
    if (t.nu.isZero() && t.mu.isZero()) return true;
  return false;
}

bool operator==(const MixedPolynomial& a, const MixedPolynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    const MixedTerm &s = a.terms_[i], &t = b.terms_[i];
    if (s.nu != t.nu || s.mu != t.mu || s.coeff != t.coeff) return false;
  }
  return true;
}

MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b) {
  if (a.nvars() != b.nvars()) throw DomainError("polynomial sum: variable counts differ");
  std::vector<MixedTerm> ts = a.terms();
  ts.insert(ts.end(), b.terms().begin(), b.terms().end());
  return MixedPolynomial::from_terms(a.nvars(), std::move(ts));
}

MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b) {
  return a + (GaussianRational(-1) * b);
}

MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b) {
  if (a.nvars() != b.nvars()) throw DomainError("polynomial product: variable counts differ");
  std::vector<MixedTerm> ts;
  ts.reserve(a.terms().size() * b.terms().size());
  for (const MixedTerm& s : a.terms())
    for (const MixedTerm& t : b.terms())
      ts.push_back({s.coeff * t.coeff, s.nu + t.nu, s.mu + t.mu});
  return MixedPolynomial::from_terms(a.nvars(), std::move(ts));
}

MixedPolynomial operator*(const GaussianRational& c, const MixedPolynomial& f) {
  std::vector<MixedTerm> ts = f.terms();
  for (MixedTerm& t : ts) t.coeff = c * t.coeff;
  return MixedPolynomial::from_terms(f.nvars(), std::move(ts));
}

MixedPolynomial wirtinger_dz(const MixedPolynomial& f, int j) {
  if (j < 0 || j >= f.nvars()) throw DomainError("wirtinger_dz: variable index out of range");
  std::vector<MixedTerm> ts;
  for (const MixedTerm& t : f.terms()) {
    if (t.nu(j) == 0) continue;
    MixedTerm d = t;
    d.coeff = GaussianRational(BigRat(t.nu(j))) * t.coeff;
    d.nu(j) -= 1;
    ts.push_back(std::move(d));
  }
  return MixedPolynomial::from_terms(f.nvars(), std::move(ts));
}

MixedPolynomial wirtinger_dzbar(const MixedPolynomial& f, int j) {
  if (j < 0 || j >= f.nvars()) throw DomainError("wirtinger_dzbar: variable index out of range");
  std::vector<MixedTerm> ts;
  for (const MixedTerm& t : f.terms()) {
    if (t.mu(j) == 0) continue;
    MixedTerm d = t;
    d.coeff = GaussianRational(BigRat(t.mu(j))) * t.coeff;
    d.mu(j) -= 1;
    ts.push_back(std::move(d));
  }
  return MixedPolynomial::from_terms(f.nvars(), std::move(ts));
}

MixedPolynomial restrict_to(const MixedPolynomial& f, const std::vector<int>& axes) {
  if (axes.empty()) throw DomainError("restriction to the empty axis set");
  std::vector<bool> keep(static_cast<size_t>(f.nvars()), false);
  for (int a : axes) {
    if (a < 0 || a >= f.nvars()) throw DomainError("restrict_to: axis index out of range");
    keep[static_cast<size_t>(a)] = true;
  }
  std::vector<MixedTerm> ts;
  for (const MixedTerm& t : f.terms()) {
    bool pure = true;
    for (int j = 0; j < f.nvars() && pure; ++j)
      if (!keep[static_cast<size_t>(j)] && (t.nu(j) != 0 || t.mu(j) != 0)) pure = false;
    if (pure) ts.push_back(t);
  }
  return MixedPolynomial::from_terms(f.nvars(), std::move(ts));
}

MixedPolynomial conj_swap(const MixedPolynomial& f) {
  std::vector<MixedTerm> ts;
  for (const MixedTerm& t : f.terms()) ts.push_back({conj(t.coeff), t.mu, t.nu});
  return MixedPolynomial::from_terms(f.nvars(), std::move(ts));
}

bool is_real_valued(const MixedPolynomial& f) { return f == conj_swap(f); }

ConvenienceReport is_convenient(const MixedPolynomial& f) {
  if (f.is_zero()) throw DomainError("convenience is undefined for the zero polynomial");
  ConvenienceReport rep;
  rep.axis_witness.assign(static_cast<size_t>(f.nvars()), std::nullopt);
  for (int i = 0; i < f.nvars(); ++i) {
    for (size_t ti = 0; ti < f.terms().size(); ++ti) {
      const MixedTerm& t = f.terms()[ti];
      if (t.nu(i) + t.mu(i) == 0) continue;
      bool axis_pure = true;
      for (int j = 0; j < f.nvars() && axis_pure; ++j)
        if (j != i && (t.nu(j) != 0 || t.mu(j) != 0)) axis_pure = false;
      if (axis_pure) {
        rep.axis_witness[static_cast<size_t>(i)] = static_cast<int>(ti);
        break;
      }
    }
  }
  rep.convenient = std::all_of(rep.axis_witness.begin(), rep.axis_witness.end(),
                               [](const auto& w) { return w.has_value(); });
  return rep;
}

std::vector<std::complex<double>> evaluate_terms(const MixedPolynomial& f,
                                                 const Eigen::VectorXcd& z) {
  if (z.size() != f.nvars()) throw DomainError("evaluate_terms: dimension mismatch");
  std::vector<std::complex<double>> out;
  out.reserve(f.terms().size());
  for (const MixedTerm& t : f.terms()) {
    std::complex<double> v = t.coeff.to_complex();
    for (int j = 0; j < f.nvars(); ++j) {
      if (t.nu(j) > 0) v *= pow_nonneg(z(j), t.nu(j));
      if (t.mu(j) > 0) v *= pow_nonneg(std::conj(z(j)), t.mu(j));
    }
    out.push_back(v);
  }
  return out;
}

double term_magnitude_sum(const MixedPolynomial& f, const Eigen::VectorXcd& z) {
  double s = 0;
  for (const auto& v : evaluate_terms(f, z)) s += std::abs(v);
  return s;
}

}  // namespace mixednewton
