#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mixednewton/mixed_polynomial.hpp"

namespace mixednewton {

/// Syntax error with the byte offset of the offending character.
struct ParseError : Error {
  ParseError(const std::string& what, size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position(position) {}
  size_t position;
};

struct ParseOptions {
  /// Reject terms with nu = mu = 0, enforcing f(0) = 0 (germ input).
  bool reject_constant_term = false;
};

/// Parses the polynomial grammar:
///   variables z1..zn and conjugates zb1..zbn, '*' products, '^' nonnegative
///   integer exponents, exact coefficients like 3, -3/2, i, 2i, (1/2-3/4i).
/// Returns the canonical form; parse-format-parse is the identity on it.
MixedPolynomial parse_polynomial(std::string_view text, int nvars, ParseOptions opts = {});

/// Largest variable index mentioned (0 when no variable occurs).
int infer_nvars(std::string_view text);

/// Loads one polynomial from a UTF-8 file; '#' starts a comment.
/// When nvars is not given it is inferred from the text.
MixedPolynomial load_polynomial_file(const std::string& path, std::optional<int> nvars,
                                     ParseOptions opts = {});

/// Canonical text form; parses back to an equal polynomial.
std::string to_string(const MixedPolynomial& f);

/// Parses a single exact complex literal such as "1", "-3/2", "i", "1/2-3/4i".
GaussianRational parse_gaussian_rational(std::string_view text);

/// Parses a comma-separated list of exact complex literals.
std::vector<GaussianRational> parse_point(std::string_view text);

}  // namespace mixednewton
