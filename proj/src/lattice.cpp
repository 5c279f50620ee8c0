#include "mixednewton/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>

namespace mixednewton {

namespace {

BigInt big_gcd(BigInt a, BigInt b) { return boost::multiprecision::gcd(a, b); }

// g = gcd(a, b) together with s, t such that s*a + t*b = g.
void xgcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  s = s0;
  t = t0;
}

Int narrow(const BigInt& x) {
  if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
    throw DomainError("integer overflow narrowing a lattice entry");
  return x.convert_to<Int>();
}

BigIntMat to_big(const IntMat& m) {
  BigIntMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMat to_small(const BigIntMat& m) {
  IntMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = narrow(m(i, j));
  return r;
}

// Row-style Hermite normal form, in place. Returns the rank. Rows beyond the
// rank are zero. Pivots positive, entries above each pivot reduced mod pivot.
Eigen::Index hnf_rows_inplace(BigIntMat& M) {
  const Eigen::Index rows = M.rows(), cols = M.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (M(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    M.row(piv).swap(M.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (M(i, c) == 0) continue;
      BigInt g, s, t;
      xgcd(M(r, c), M(i, c), g, s, t);
      BigInt ar = M(r, c) / g, ai = M(i, c) / g;
      for (Eigen::Index j = 0; j < cols; ++j) {
        BigInt nr = s * M(r, j) + t * M(i, j);
        BigInt ni = ar * M(i, j) - ai * M(r, j);
        M(r, j) = nr;
        M(i, j) = ni;
      }
    }
    if (M(r, c) < 0) M.row(r) = -M.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      // floor division so the residue lands in [0, pivot)
      BigInt q = M(i, c) / M(r, c);
      if (M(i, c) - q * M(r, c) < 0) q -= 1;
      if (q != 0)
        for (Eigen::Index j = 0; j < cols; ++j) M(i, j) -= q * M(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  Int acc = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) acc += a(i) * b(i);
  return acc;
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, v(i));
  if (g == 0 || g == 1) return v;
  IntVec r = v;
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) /= g;
  return r;
}

IntVec sign_normalized(IntVec v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    if (v(i) < 0) v = -v;
    break;
  }
  return v;
}

IntMat hermite_row_basis(const IntMat& rows) {
  BigIntMat M = to_big(rows);
  Eigen::Index rank = hnf_rows_inplace(M);
  BigIntMat top = M.topRows(rank);
  return to_small(top);
}

IntMat integer_kernel_basis(const IntMat& D) {
  const Eigen::Index m = D.rows(), n = D.cols();
  BigIntMat A = to_big(D);
  BigIntMat U = BigIntMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) U(i, i) = 1;
  std::vector<bool> pivoted(static_cast<size_t>(n), false);

  for (Eigen::Index r = 0; r < m; ++r) {
    Eigen::Index lead = -1;
    for (Eigen::Index c = 0; c < n; ++c)
      if (!pivoted[static_cast<size_t>(c)] && A(r, c) != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    for (Eigen::Index c = lead + 1; c < n; ++c) {
      if (pivoted[static_cast<size_t>(c)] || A(r, c) == 0) continue;
      BigInt g, s, t;
      xgcd(A(r, lead), A(r, c), g, s, t);
      BigInt al = A(r, lead) / g, ac = A(r, c) / g;
      for (Eigen::Index i = 0; i < m; ++i) {
        BigInt nl = s * A(i, lead) + t * A(i, c);
        BigInt nc = al * A(i, c) - ac * A(i, lead);
        A(i, lead) = nl;
        A(i, c) = nc;
      }
      for (Eigen::Index i = 0; i < n; ++i) {
        BigInt nl = s * U(i, lead) + t * U(i, c);
        BigInt nc = al * U(i, c) - ac * U(i, lead);
        U(i, lead) = nl;
        U(i, c) = nc;
      }
    }
    pivoted[static_cast<size_t>(lead)] = true;
  }

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!pivoted[static_cast<size_t>(c)]) free_cols.push_back(c);

  BigIntMat K(static_cast<Eigen::Index>(free_cols.size()), n);
  for (size_t i = 0; i < free_cols.size(); ++i)
    for (Eigen::Index j = 0; j < n; ++j) K(static_cast<Eigen::Index>(i), j) = U(j, free_cols[i]);
  Eigen::Index rank = hnf_rows_inplace(K);
  BigIntMat top = K.topRows(rank);
  return to_small(top);
}

bool in_lattice(const IntMat& hnf_rows, const IntVec& v) {
  if (hnf_rows.cols() != v.size()) throw DomainError("in_lattice: dimension mismatch");
  BigIntVec w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = v(i);
  for (Eigen::Index r = 0; r < hnf_rows.rows(); ++r) {
    Eigen::Index lead = -1;
    for (Eigen::Index c = 0; c < hnf_rows.cols(); ++c)
      if (hnf_rows(r, c) != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    BigInt p = hnf_rows(r, lead);
    if (w(lead) % p != 0) return false;
    BigInt q = w(lead) / p;
    if (q != 0)
      for (Eigen::Index c = 0; c < hnf_rows.cols(); ++c) w(c) -= q * BigInt(hnf_rows(r, c));
  }
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i) != 0) return false;
  return true;
}

Eigen::Index rank_exact(const IntMat& M) {
  BigIntMat A = to_big(M);
  return hnf_rows_inplace(A);
}

std::optional<BigRatVec> strict_feasible_point(const BigRatMat& M) {
  const Eigen::Index k = M.cols();
  using Row = std::vector<BigRat>;  // coefficients over all k variables
  auto all_zero = [k](const Row& r, Eigen::Index from) {
    for (Eigen::Index j = from; j < k; ++j)
      if (r[static_cast<size_t>(j)] != 0) return false;
    return true;
  };

  std::vector<Row> sys;
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Row r(static_cast<size_t>(k));
    for (Eigen::Index j = 0; j < k; ++j) r[static_cast<size_t>(j)] = M(i, j);
    if (all_zero(r, 0)) return std::nullopt;  // the row reads 0 > 0
    sys.push_back(std::move(r));
  }

  std::vector<std::vector<Row>> snapshots;
  for (Eigen::Index v = 0; v < k; ++v) {
    snapshots.push_back(sys);
    std::vector<Row> lower, upper, next;
    for (auto& r : sys) {
      const BigRat& c = r[static_cast<size_t>(v)];
      if (c > 0)
        lower.push_back(r);
      else if (c < 0)
        upper.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        const BigRat cl = lo[static_cast<size_t>(v)];  // > 0
        const BigRat cu = up[static_cast<size_t>(v)];  // < 0
        Row d(static_cast<size_t>(k));
        for (Eigen::Index j = v + 1; j < k; ++j)
          d[static_cast<size_t>(j)] =
              cl * up[static_cast<size_t>(j)] - cu * lo[static_cast<size_t>(j)];
        if (all_zero(d, v + 1)) return std::nullopt;
        next.push_back(std::move(d));
      }
    }
    sys = std::move(next);
  }

  BigRatVec x = BigRatVec::Zero(k);
  for (Eigen::Index v = k - 1; v >= 0; --v) {
    bool has_lo = false, has_up = false;
    BigRat lo_val, up_val;
    for (const auto& r : snapshots[static_cast<size_t>(v)]) {
      const BigRat& c = r[static_cast<size_t>(v)];
      if (c == 0) continue;
      BigRat rest = 0;
      for (Eigen::Index j = v + 1; j < k; ++j) rest += r[static_cast<size_t>(j)] * x(j);
      BigRat bound = -rest / c;
      if (c > 0) {
        if (!has_lo || bound > lo_val) lo_val = bound;
        has_lo = true;
      } else {
        if (!has_up || bound < up_val) up_val = bound;
        has_up = true;
      }
    }
    if (has_lo && has_up)
      x(v) = (lo_val + up_val) / 2;
    else if (has_lo)
      x(v) = lo_val + 1;
    else if (has_up)
      x(v) = up_val - 1;
    else
      x(v) = 1;
  }

  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    BigRat acc = 0;
    for (Eigen::Index j = 0; j < k; ++j) acc += M(i, j) * x(j);
    if (!(acc > 0)) throw Error("strict_feasible_point: back-substitution failed");
  }
  return x;
}

IntVec rational_to_primitive_int(const BigRatVec& x) {
  BigInt lcm = 1;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    BigInt den = boost::multiprecision::denominator(x(i));
    lcm = lcm / big_gcd(lcm, den) * den;
  }
  BigIntVec scaled(x.size());
  BigInt g = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    scaled(i) = boost::multiprecision::numerator(x(i)) *
                (lcm / boost::multiprecision::denominator(x(i)));
    g = big_gcd(g, scaled(i));
  }
  IntVec out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out(i) = narrow(g == 0 ? scaled(i) : scaled(i) / g);
  return out;
}

std::optional<IntVec> positive_lattice_vector(const IntMat& basis_rows,
                                              const std::vector<IntVec>& extra_strict) {
  const Eigen::Index k = basis_rows.rows(), n = basis_rows.cols();
  if (k == 0) return std::nullopt;
  BigRatMat M(n + static_cast<Eigen::Index>(extra_strict.size()), k);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index b = 0; b < k; ++b) M(j, b) = basis_rows(b, j);
  for (size_t e = 0; e < extra_strict.size(); ++e) {
    if (extra_strict[e].size() != n)
      throw DomainError("positive_lattice_vector: functional dimension mismatch");
    for (Eigen::Index b = 0; b < k; ++b) {
      BigRat acc = 0;
      for (Eigen::Index j = 0; j < n; ++j) acc += BigRat(basis_rows(b, j)) * extra_strict[e](j);
      M(n + static_cast<Eigen::Index>(e), b) = acc;
    }
  }
  auto lambda = strict_feasible_point(M);
  if (!lambda) return std::nullopt;
  BigRatVec p = BigRatVec::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index b = 0; b < k; ++b) p(j) += BigRat(basis_rows(b, j)) * (*lambda)(b);
  return rational_to_primitive_int(p);
}

}  // namespace mixednewton
