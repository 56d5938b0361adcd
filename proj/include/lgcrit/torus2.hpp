#pragma once

#include <string>
#include <vector>

#include "lgcrit/rational.hpp"

namespace lgcrit {

/// Signed weighted disk counts of a triangle PQR on a Lagrangian 2-torus.
/// Inputs to the algebra, never computed from geometry here.
struct TriangleCounts {
  long long n_p = 0;
  long long n_q = 0;
  long long n_r = 0;
  long long n_pqr = 0;
};

/// Structure constants of p~ * p~ = sigma p~ t + tau [L] t^2. Rational so
/// that basepoint shifts by rational r stay exact.
struct SigmaTau {
  Rational sigma;
  Rational tau;

  Rational discriminant() const { return sigma * sigma + Rational(4) * tau; }
};

/// Delta = 4 n_PQR + n_P^2 + n_Q^2 + n_R^2 - 2 n_P n_Q - 2 n_Q n_R - 2 n_R n_P.
long long triangle_discriminant(const TriangleCounts& c);

/// sigma = n_P - n_Q - n_R, tau = n_PQR - n_Q n_R; sigma^2 + 4 tau equals the
/// triangle discriminant identically.
SigmaTau sigma_tau_from_counts(const TriangleCounts& c);

/// Basepoint shift p~ -> p~ + r [L] t: sigma' = sigma + 2r, tau' = tau - sigma r - r^2.
SigmaTau sigma_tau_shift(const SigmaTau& st, const Rational& r);

/// From the expansion C_1*C_1 = (a11/2)[L]t, C_2*C_2 = (a22/2)[L]t,
/// C_1*C_2 = p~ + a'[L]t, C_2*C_1 = -p~ + a''[L]t:
/// sigma = a'' - a', tau = a' a'' - a11 a22 / 4, and
/// sigma^2 + 4 tau = a12^2 - a11 a22 with a12 = a' + a''.
struct StructuralSigmaTau {
  SigmaTau st;
  Rational determinant_identity_lhs;  // sigma^2 + 4 tau
  Rational determinant_identity_rhs;  // a12^2 - a11 a22
  bool identity_holds = false;
};
StructuralSigmaTau sigma_tau_from_structural(const Rational& a11, const Rational& a22,
                                             const Rational& a_prime,
                                             const Rational& a_double_prime);

struct Mod2Check {
  std::string name;
  bool applicable = true;  // Delta-odd checks are skipped when Delta is even
  bool pass = false;
  std::string detail;
};

/// The congruence checks at the trivial representation:
///   (1) Delta == n_P + n_Q + n_R (mod 2)
///   (2) Delta mod 4 in {0, 1}
/// and, when Delta is odd:
///   (i)   tau mod 2 invariant under integer basepoint shifts (r in -3..3)
///   (ii)  n_P n_Q == n_Q n_R == n_R n_P (mod 2)
///   (iii) n_PQR + n_P n_Q == tau (mod 2)
/// Violations come back as failed checks; they flag inconsistent input data.
std::vector<Mod2Check> mod2_report(long long delta, const TriangleCounts& c, long long tau);

}  // namespace lgcrit
