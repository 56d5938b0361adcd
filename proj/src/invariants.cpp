#include "lgcrit/invariants.hpp"

#include <numeric>

#include "lgcrit/critsolve.hpp"

namespace lgcrit {

namespace {

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

Complex monomial_value(const Exponents& e, const TorusPoint& z) {
  Complex m(1);
  for (int i = 0; i < static_cast<int>(e.size()); ++i) {
    const int k = e[i];
    if (k == 0) continue;
    const Complex base = k > 0 ? z[i] : Complex(1) / z[i];
    for (int rep = 0; rep < std::abs(k); ++rep) m *= base;
  }
  return m;
}

}  // namespace

QuadFormW1 quadform_w1(const SuperpotentialSpec& spec) {
  const int n = spec.dim;
  QuadFormW1 q;
  q.dim = n;
  q.sign = parity_sign(n);
  q.entries.assign(n, std::vector<PolyC>(n, PolyC::zero(n)));
  const auto h = log_hessian(spec.potential);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q.entries[i][j] = Complex(q.sign) * h[i][j];
  return q;
}

QuadFormW2 quadform_w2(const FanData& fan) {
  const int n = fan.dim;
  const int r = fan.facet_count();
  QuadFormW2 q;
  q.dim = n;
  q.facet_count = r;
  q.sign = parity_sign(n);
  q.entries.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(r)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < r; ++k)
        q.entries[i][j][k] = Rational(q.sign) * Rational(fan.vectors[k][i]) *
                             Rational(fan.vectors[k][j]);
  return q;
}

Complex discriminant_vector(const SuperpotentialSpec& spec, const TorusPoint& z) {
  return Complex(parity_sign(spec.dim + 1)) * moment_hessian(spec, z).determinant();
}

HessianDiscriminant discriminant_hessian(const SuperpotentialSpec& spec, const TorusPoint& z) {
  const int n = spec.dim;
  Eigen::MatrixXcd h = moment_hessian(spec, z);
  HessianDiscriminant out;
  double gnorm = 0.0;
  for (int j = 0; j < n; ++j) {
    // g_j(z) = sum_k nu_k e_k^j z^{e_k}; subtract on the diagonal to turn the
    // moment Hessian into z_i z_j d2P/dz_i dz_j
    Complex gj(0);
    for (const auto& [e, c] : spec.potential.terms())
      if (e[j] != 0) gj += c * Complex(e[j]) * monomial_value(e, z);
    h(j, j) -= gj;
    gnorm = std::max(gnorm, std::abs(gj));
  }
  out.gradient_norm = gnorm;
  out.applicable = gnorm <= 1e-8;
  out.value = Complex(parity_sign(n + 1)) * h.determinant();
  return out;
}

Complex discriminant_minorsum(const FanData& fan, const TorusPoint& z) {
  const int n = fan.dim;
  const int r = fan.facet_count();
  if (r < n) return Complex(0);
  Complex sum(0);
  std::vector<int> comb(n);
  std::iota(comb.begin(), comb.end(), 0);
  Eigen::MatrixXd a(n, n);
  while (true) {
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col) a(row, col) = fan.vectors[comb[row]][col];
    const double det = a.determinant();
    const double det2 = det * det;
    if (det2 > 0.25) {  // integer matrix: nonzero det means |det| >= 1
      Exponents vi(n, 0);
      for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col) vi[col] += fan.vectors[comb[row]][col];
      sum += Complex(std::round(det2)) * monomial_value(vi, z);
    }
    int i = n - 1;
    while (i >= 0 && comb[i] == r - n + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
  }
  return Complex(parity_sign(n + 1)) * sum;
}

Eigen::MatrixXcd evaluate_quadform(const QuadFormW1& q, const TorusPoint& z) {
  const int n = q.dim;
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = evaluate(q.entries[i][j], z);
  return m;
}

}  // namespace lgcrit
