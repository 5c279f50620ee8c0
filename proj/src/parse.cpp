#include "mixednewton/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mixednewton {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  BigInt natural() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected a digit");
    BigInt v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

BigRat rational(Cursor& c) {
  BigInt num = c.natural();
  if (c.peek() == '/') {
    c.advance();
    BigInt den = c.natural();
    if (den == 0) c.fail("zero denominator");
    return BigRat(num, den);
  }
  return BigRat(num);
}

// rational ['i'] | 'i'  — one real or imaginary summand of a complex literal.
GaussianRational complex_part(Cursor& c) {
  if (c.peek() == 'i') {
    c.advance();
    return GaussianRational(BigRat(0), BigRat(1));
  }
  BigRat r = rational(c);
  if (c.peek_raw() == 'i') {  // "3i": no whitespace between the number and i
    c.advance();
    return GaussianRational(BigRat(0), r);
  }
  return GaussianRational(r);
}

GaussianRational complex_literal(Cursor& c) {
  GaussianRational acc;
  bool first = true;
  while (true) {
    int sign = 1;
    if (c.peek() == '+') {
      c.advance();
    } else if (c.peek() == '-') {
      c.advance();
      sign = -1;
    } else if (!first) {
      break;
    }
    GaussianRational part = complex_part(c);
    acc += sign < 0 ? -part : part;
    first = false;
    if (c.peek() != '+' && c.peek() != '-') break;
  }
  return acc;
}

struct RawTerm {
  GaussianRational coeff{BigRat(1)};
  std::vector<std::pair<int, Int>> z_pows;   // (0-based var, exponent)
  std::vector<std::pair<int, Int>> zb_pows;  // conjugate factors
};

Int exponent(Cursor& c) {
  if (c.peek() == '-') c.fail("negative exponent");
  BigInt e = c.natural();
  if (e > 1000000000) c.fail("exponent too large");
  return e.convert_to<Int>();
}

// 'z' or 'zb' followed by a 1-based index, optionally '^' exponent.
void variable_factor(Cursor& c, int nvars, RawTerm& t) {
  c.expect('z', "a variable");
  bool conjugate = false;
  if (c.peek_raw() == 'b') {
    c.advance();
    conjugate = true;
  }
  size_t at = c.pos();
  BigInt idx = c.natural();
  if (idx < 1) throw ParseError("variable index must be at least 1", at);
  if (idx > nvars) throw ParseError("variable index exceeds the variable count", at);
  int j = idx.convert_to<int>() - 1;
  Int e = 1;
  if (c.peek() == '^') {
    c.advance();
    e = exponent(c);
  }
  (conjugate ? t.zb_pows : t.z_pows).emplace_back(j, e);
}

void factor(Cursor& c, int nvars, RawTerm& t) {
  char p = c.peek();
  if (p == 'z') {
    variable_factor(c, nvars, t);
  } else if (p == '(') {
    c.advance();
    GaussianRational v = complex_literal(c);
    c.expect(')', "')'");
    t.coeff *= v;
  } else if (p == 'i' || std::isdigit(static_cast<unsigned char>(p))) {
    t.coeff *= complex_part(c);
  } else {
    c.fail("expected a coefficient or a variable");
  }
}

MixedTerm finish_term(const RawTerm& rt, int nvars, int sign) {
  MixedTerm t;
  t.coeff = sign < 0 ? -rt.coeff : rt.coeff;
  t.nu = IntVec::Zero(nvars);
  t.mu = IntVec::Zero(nvars);
  for (auto [j, e] : rt.z_pows) t.nu(j) += e;
  for (auto [j, e] : rt.zb_pows) t.mu(j) += e;
  return t;
}

}  // namespace

MixedPolynomial parse_polynomial(std::string_view text, int nvars, ParseOptions opts) {
  if (nvars < 1) throw DomainError("parse_polynomial: nvars must be positive");
  Cursor c(text);
  std::vector<MixedTerm> terms;
  if (c.eof()) c.fail("empty polynomial");
  bool first = true;
  while (!c.eof()) {
    int sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (c.accept('+')) {
      if (first) { /* an explicit leading plus is fine */
      }
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    RawTerm rt;
    factor(c, nvars, rt);
    while (c.accept('*')) factor(c, nvars, rt);
    terms.push_back(finish_term(rt, nvars, sign));
    first = false;
  }
  MixedPolynomial f = MixedPolynomial::from_terms(nvars, std::move(terms));
  if (opts.reject_constant_term && f.has_constant_term())
    throw ParseError("constant term not allowed for a germ (f(0) must vanish)", 0);
  return f;
}

int infer_nvars(std::string_view text) {
  int best = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'z') continue;
    size_t j = i + 1;
    if (j < text.size() && text[j] == 'b') ++j;
    size_t k = j;
    long idx = 0;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])) && idx < 1000000) {
      idx = idx * 10 + (text[k] - '0');
      ++k;
    }
    if (k > j && idx > best) best = static_cast<int>(idx);
    i = k > j ? k - 1 : i;
  }
  return best;
}

MixedPolynomial load_polynomial_file(const std::string& path, std::optional<int> nvars,
                                     ParseOptions opts) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open polynomial file: " + path);
  std::string line, text;
  while (std::getline(in, line)) {
    if (size_t h = line.find('#'); h != std::string::npos) line.erase(h);
    text += line;
    text += ' ';
  }
  int n = nvars ? *nvars : infer_nvars(text);
  if (n < 1) throw Error("cannot infer the variable count of " + path + "; none mentioned");
  return parse_polynomial(text, n, opts);
}

namespace {

std::string rational_magnitude(const BigRat& x) {
  return to_string(x < 0 ? BigRat(-x) : x);
}

// Prints the coefficient followed by '*' if variables follow, handling the
// +/-1 shorthand. `sign_out` receives the printed sign.
std::string coefficient_text(const GaussianRational& c, bool has_vars, char& sign_out) {
  if (c.im == 0) {
    sign_out = c.re < 0 ? '-' : '+';
    if (has_vars && (c.re == 1 || c.re == -1)) return "";
    return rational_magnitude(c.re) + (has_vars ? "*" : "");
  }
  if (c.re == 0) {
    sign_out = c.im < 0 ? '-' : '+';
    std::string mag = (c.im == 1 || c.im == -1) ? "i" : rational_magnitude(c.im) + "i";
    return mag + (has_vars ? "*" : "");
  }
  sign_out = '+';
  std::string s = "(" + to_string(c.re);
  s += c.im < 0 ? "-" : "+";
  if (c.im != 1 && c.im != -1) s += rational_magnitude(c.im);
  s += "i)";
  return s + (has_vars ? "*" : "");
}

}  // namespace

std::string to_string(const BigRat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string to_string(const GaussianRational& z) {
  char sign = '+';
  std::string body = coefficient_text(z, false, sign);
  return (sign == '-' ? "-" : "") + body;
}

std::string to_string(const MixedPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const MixedTerm& t : f.terms()) {
    std::string vars;
    for (int j = 0; j < f.nvars(); ++j) {
      if (t.nu(j) == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += "z" + std::to_string(j + 1);
      if (t.nu(j) > 1) vars += "^" + std::to_string(t.nu(j));
    }
    for (int j = 0; j < f.nvars(); ++j) {
      if (t.mu(j) == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += "zb" + std::to_string(j + 1);
      if (t.mu(j) > 1) vars += "^" + std::to_string(t.mu(j));
    }
    char sign = '+';
    std::string coeff = coefficient_text(t.coeff, !vars.empty(), sign);
    if (first)
      out += (sign == '-' ? "-" : "");
    else
      out += sign == '-' ? " - " : " + ";
    out += coeff + vars;
    first = false;
  }
  return out;
}

GaussianRational parse_gaussian_rational(std::string_view text) {
  Cursor c(text);
  GaussianRational v = complex_literal(c);
  if (!c.eof()) c.fail("trailing characters after a complex literal");
  return v;
}

std::vector<GaussianRational> parse_point(std::string_view text) {
  std::vector<GaussianRational> coords;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string_view piece =
        comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
    coords.push_back(parse_gaussian_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return coords;
}

}  // namespace mixednewton
