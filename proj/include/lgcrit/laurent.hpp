#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgcrit {

/// Exponent vector of a Laurent monomial: a length-n tuple of signed
/// integers. Doubles as a facet normal and a disk-class boundary.
/// std::vector's operator< is lexicographic, which is the term order here.
using Exponents = std::vector<int>;

using Complex = std::complex<double>;

/// A point of the algebraic torus (C*)^n. Coordinates must be nonzero.
using TorusPoint = Eigen::VectorXcd;

/// Multivariate Laurent polynomial with exact integer exponents, stored as a
/// sorted exponent -> coefficient table. Canonical form: no coefficient is
/// the exact additive identity, terms sorted lexicographically. Values are
/// immutable in spirit: all arithmetic returns fresh polynomials.
template <class Scalar>
class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponents, Scalar>;

  explicit LaurentPolynomial(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("LaurentPolynomial: dim must be >= 1");
  }

  static LaurentPolynomial zero(int dim) { return LaurentPolynomial(dim); }

  static LaurentPolynomial constant(int dim, const Scalar& c) {
    LaurentPolynomial p(dim);
    p.add_term(Exponents(dim, 0), c);
    return p;
  }

  static LaurentPolynomial monomial(int dim, const Scalar& c, const Exponents& e) {
    if (static_cast<int>(e.size()) != dim)
      throw std::invalid_argument("LaurentPolynomial: exponent length != dim");
    LaurentPolynomial p(dim);
    p.add_term(e, c);
    return p;
  }

  /// Monomial z_axis (axis is 0-based).
  static LaurentPolynomial variable(int dim, int axis) {
    Exponents e(dim, 0);
    e.at(axis) = 1;
    return monomial(dim, Scalar(1), e);
  }

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Accumulate c * z^e, dropping the entry iff the sum is the exact
  /// additive identity (never by magnitude).
  void add_term(const Exponents& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != dim_)
      throw std::invalid_argument("LaurentPolynomial: exponent length != dim");
    if (c == Scalar(0)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }

 private:
  int dim_;
  TermMap terms_;
};

using PolyC = LaurentPolynomial<Complex>;

namespace detail {
inline void check_same_dim(int a, int b) {
  if (a != b) throw std::invalid_argument("LaurentPolynomial: dimension mismatch");
}
}  // namespace detail

template <class Scalar>
LaurentPolynomial<Scalar> operator+(const LaurentPolynomial<Scalar>& p,
                                    const LaurentPolynomial<Scalar>& q) {
  detail::check_same_dim(p.dim(), q.dim());
  LaurentPolynomial<Scalar> r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, c);
  return r;
}

template <class Scalar>
LaurentPolynomial<Scalar> operator-(const LaurentPolynomial<Scalar>& p,
                                    const LaurentPolynomial<Scalar>& q) {
  detail::check_same_dim(p.dim(), q.dim());
  LaurentPolynomial<Scalar> r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, -c);
  return r;
}

template <class Scalar>
LaurentPolynomial<Scalar> operator-(const LaurentPolynomial<Scalar>& p) {
  LaurentPolynomial<Scalar> r(p.dim());
  for (const auto& [e, c] : p.terms()) r.add_term(e, -c);
  return r;
}

template <class Scalar>
LaurentPolynomial<Scalar> operator*(const LaurentPolynomial<Scalar>& p,
                                    const LaurentPolynomial<Scalar>& q) {
  detail::check_same_dim(p.dim(), q.dim());
  LaurentPolynomial<Scalar> r(p.dim());
  Exponents e(p.dim());
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms()) {
      for (int i = 0; i < p.dim(); ++i) e[i] = ep[i] + eq[i];
      r.add_term(e, cp * cq);
    }
  return r;
}

template <class Scalar>
LaurentPolynomial<Scalar> operator*(const Scalar& s, const LaurentPolynomial<Scalar>& p) {
  LaurentPolynomial<Scalar> r(p.dim());
  for (const auto& [e, c] : p.terms()) r.add_term(e, s * c);
  return r;
}

template <class Scalar>
LaurentPolynomial<Scalar> operator*(const LaurentPolynomial<Scalar>& p, const Scalar& s) {
  return s * p;
}

/// z_j dp/dz_j (axis is 0-based): c * z^e |-> (c * e_j) * z^e.
template <class Scalar>
LaurentPolynomial<Scalar> log_derivative(const LaurentPolynomial<Scalar>& p, int axis) {
  if (axis < 0 || axis >= p.dim())
    throw std::out_of_range("log_derivative: axis out of range");
  LaurentPolynomial<Scalar> r(p.dim());
  for (const auto& [e, c] : p.terms())
    if (e[axis] != 0) r.add_term(e, c * Scalar(e[axis]));
  return r;
}

/// Symmetric n x n matrix of polynomials with (i,j) entry z_i d_i (z_j d_j p);
/// term rule c * z^e |-> (c * e_i * e_j) * z^e. The genuine second
/// log-derivative is z_i z_j d2p/dz_i dz_j = h_ij - delta_ij * (z_i d_i p).
template <class Scalar>
std::vector<std::vector<LaurentPolynomial<Scalar>>> log_hessian(
    const LaurentPolynomial<Scalar>& p) {
  const int n = p.dim();
  std::vector<std::vector<LaurentPolynomial<Scalar>>> h(
      n, std::vector<LaurentPolynomial<Scalar>>(n, LaurentPolynomial<Scalar>::zero(n)));
  for (const auto& [e, c] : p.terms())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (e[i] != 0 && e[j] != 0) h[i][j].add_term(e, c * Scalar(e[i] * e[j]));
  return h;
}

/// Evaluate at a torus point: sum of c * prod z_i^{e_i}, negative exponents
/// via reciprocal. Throws on a zero coordinate.
inline Complex evaluate(const PolyC& p, const TorusPoint& pt) {
  if (pt.size() != p.dim()) throw std::invalid_argument("evaluate: dimension mismatch");
  for (Eigen::Index i = 0; i < pt.size(); ++i)
    if (pt[i] == Complex(0)) throw std::domain_error("evaluate: zero coordinate");
  Complex acc(0);
  for (const auto& [e, c] : p.terms()) {
    Complex m = c;
    for (int i = 0; i < p.dim(); ++i) {
      const int k = e[i];
      if (k == 0) continue;
      const Complex base = k > 0 ? pt[i] : Complex(1) / pt[i];
      for (int rep = 0; rep < std::abs(k); ++rep) m *= base;
    }
    acc += m;
  }
  return acc;
}

/// Evaluate an n x n polynomial matrix into a dense Eigen matrix.
inline Eigen::MatrixXcd evaluate_matrix(const std::vector<std::vector<PolyC>>& m,
                                        const TorusPoint& pt) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = evaluate(m[i][j], pt);
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering and parsing.
// Grammar: terms joined by " + ", each term "c*z1^a1*...*zn^an" with zero
// exponents omitted, "^1" omitted, and the coefficient omitted when it is 1
// (a bare "-" for -1). Complex coefficients print as "(re+imi)".
// ---------------------------------------------------------------------------

namespace detail {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // %.17g always round-trips; shorten when a lower precision is already exact
  for (int prec = 1; prec < 17; ++prec) {
    char t[40];
    std::snprintf(t, sizeof(t), "%.*g", prec, v);
    if (std::strtod(t, nullptr) == v) return t;
  }
  return buf;
}

inline std::string format_coeff(const Complex& c) {
  if (c.imag() == 0.0) return format_double(c.real());
  std::string s = "(" + format_double(c.real());
  s += c.imag() < 0 ? "-" : "+";
  s += format_double(std::abs(c.imag())) + "i)";
  return s;
}

inline Complex parse_coeff(const std::string& tok) {
  if (!tok.empty() && tok.front() == '(') {
    if (tok.size() < 4 || tok.back() != ')' || tok[tok.size() - 2] != 'i')
      throw std::invalid_argument("parse: bad complex coefficient '" + tok + "'");
    const std::string body = tok.substr(1, tok.size() - 3);  // re±im
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
      const char ch = body[i];
      if ((ch == '+' || ch == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') split = i;
    }
    if (split == std::string::npos)
      throw std::invalid_argument("parse: bad complex coefficient '" + tok + "'");
    const double re = std::strtod(body.substr(0, split).c_str(), nullptr);
    const double im = std::strtod(body.substr(split).c_str(), nullptr);
    return {re, im};
  }
  char* end = nullptr;
  const double re = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0')
    throw std::invalid_argument("parse: bad coefficient '" + tok + "'");
  return {re, 0.0};
}

}  // namespace detail

inline std::string to_string(const PolyC& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string factors;
    for (int i = 0; i < p.dim(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "z" + std::to_string(i + 1);
      if (e[i] != 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += detail::format_coeff(c);
    } else if (c == Complex(1)) {
      out += factors;
    } else if (c == Complex(-1)) {
      out += "-" + factors;
    } else {
      out += detail::format_coeff(c) + "*" + factors;
    }
  }
  return out;
}

/// Parse the grammar emitted by to_string. dim must be supplied (a constant
/// term mentions no variables).
inline PolyC parse_poly(const std::string& text, int dim) {
  PolyC p(dim);
  const std::string& s = text;
  // split on top-level '+', ignoring '+' inside parentheses, after '^'
  // (explicit exponent sign) and after 'e'/'E' (scientific notation)
  std::vector<std::string> chunks;
  std::string cur;
  int depth = 0;
  char prev = '\0';
  for (const char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0 && prev != '^' && prev != 'e' && prev != 'E' &&
        prev != '\0') {
      chunks.push_back(cur);
      cur.clear();
      prev = '\0';
      continue;
    }
    cur += ch;
    if (ch != ' ') prev = ch;
  }
  chunks.push_back(cur);

  for (auto& chunk : chunks) {
    // drop whitespace outside parentheses
    std::string tight;
    int d = 0;
    for (const char ch : chunk) {
      if (ch == '(') ++d;
      if (ch == ')') --d;
      if (ch == ' ' && d == 0) continue;
      tight += ch;
    }
    chunk = tight;
    if (chunk.empty()) throw std::invalid_argument("parse: empty term");
    if (chunk == "0") continue;

    Complex coeff(1);
    Exponents e(dim, 0);
    std::size_t pos = 0;
    bool negate = false;
    if (chunk[pos] == '-' && pos + 1 < chunk.size() && chunk[pos + 1] == 'z') {
      negate = true;
      ++pos;
    }
    // split remaining on '*'
    std::vector<std::string> factors;
    std::string f;
    int d2 = 0;
    for (; pos < chunk.size(); ++pos) {
      const char ch = chunk[pos];
      if (ch == '(') ++d2;
      if (ch == ')') --d2;
      if (ch == '*' && d2 == 0) {
        factors.push_back(f);
        f.clear();
        continue;
      }
      f += ch;
    }
    factors.push_back(f);

    bool saw_var = false;
    for (const auto& tok : factors) {
      if (tok.empty()) throw std::invalid_argument("parse: empty factor");
      if (tok[0] == 'z') {
        const auto caret = tok.find('^');
        const std::string idx = tok.substr(1, caret == std::string::npos
                                                  ? std::string::npos
                                                  : caret - 1);
        const int axis = std::stoi(idx) - 1;
        if (axis < 0 || axis >= dim) throw std::out_of_range("parse: variable index");
        const int exp = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        e[axis] += exp;
        saw_var = true;
      } else {
        coeff *= detail::parse_coeff(tok);
      }
    }
    (void)saw_var;
    if (negate) coeff = -coeff;
    p.add_term(e, coeff);
  }
  return p;
}

}  // namespace lgcrit
