#pragma once

#include <vector>

#include "lgcrit/fan.hpp"
#include "lgcrit/laurent.hpp"
#include "lgcrit/rational.hpp"

namespace lgcrit {

/// Symmetric matrix a_ij(z) = (-1)^n sum_k nu_k e_k^i e_k^j z^{e_k} of the
/// quadratic form phi(X) = 1/2 sum a_ij X_i X_j on H_{n-1}, as Laurent
/// polynomials in z (the W1 picture).
struct QuadFormW1 {
  int dim = 0;
  int sign = 1;  // (-1)^n, recorded
  std::vector<std::vector<PolyC>> entries;
};

/// The same form on the linear wide variety: a_ij(xi) = (-1)^n sum_k v_k^i
/// v_k^j xi_k, each entry a rational linear form in xi_1..xi_r.
struct QuadFormW2 {
  int dim = 0;
  int facet_count = 0;
  int sign = 1;
  std::vector<std::vector<std::vector<Rational>>> entries;  // [i][j] -> length-r coeffs
};

QuadFormW1 quadform_w1(const SuperpotentialSpec& spec);
QuadFormW2 quadform_w2(const FanData& fan);

/// Delta(z) = (-1)^{n+1} det( sum_k nu_k e_k^i e_k^j z^{e_k} ). Total in z and
/// weight-general; the reference implementation of the discriminant.
Complex discriminant_vector(const SuperpotentialSpec& spec, const TorusPoint& z);

/// Delta via the honest second log-derivative matrix, valid on W1 only:
/// (-1)^{n+1} det( h_ij - delta_ij g_i ) = (-1)^{n+1} z_1^2..z_n^2 det(d2 P).
struct HessianDiscriminant {
  Complex value{0, 0};
  double gradient_norm = 0.0;  // max_j |g_j(z)|
  bool applicable = false;     // gradient_norm <= 1e-8
};
HessianDiscriminant discriminant_hessian(const SuperpotentialSpec& spec, const TorusPoint& z);

/// Delta via the minor sum (-1)^{n+1} sum_{|I|=n} z^{v_I} det(A_I)^2, unit
/// weights only; equals discriminant_vector identically by Cauchy-Binet.
Complex discriminant_minorsum(const FanData& fan, const TorusPoint& z);

/// Evaluate the W1 form matrix at a point.
Eigen::MatrixXcd evaluate_quadform(const QuadFormW1& q, const TorusPoint& z);

}  // namespace lgcrit
