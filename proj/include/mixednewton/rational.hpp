#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mixednewton {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Base class of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid mathematical input (zero polynomial, dimension mismatch, bad weight).
struct DomainError : Error {
  using Error::Error;
};

/// A stated precondition of an operation does not hold (reported, never ignored).
struct PreconditionError : Error {
  using Error::Error;
};

inline double to_double(const BigRat& x) { return x.convert_to<double>(); }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRat& x);

/// Exact complex number with rational real and imaginary parts.
/// All arithmetic is exact; conjugation negates the imaginary part.
struct GaussianRational {
  BigRat re{};
  BigRat im{};

  GaussianRational() = default;
  GaussianRational(BigRat real) : re(std::move(real)) {}
  GaussianRational(BigRat real, BigRat imag) : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(long real) : re(real) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

/// "3/2", "-1", "i", "-3i", "(1/2-3/4i)" — the coefficient syntax of the polynomial grammar.
std::string to_string(const GaussianRational& z);

/// z^e for a nonnegative exponent, by repeated squaring. Works for any scalar
/// with multiplication and a one-argument constructor from long.
template <class Scalar>
Scalar pow_nonneg(Scalar base, std::int64_t e) {
  if (e < 0) throw DomainError("pow_nonneg: negative exponent");
  Scalar acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace mixednewton
