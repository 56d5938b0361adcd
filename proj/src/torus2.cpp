#include "lgcrit/torus2.hpp"

namespace lgcrit {

namespace {

long long mod_pos(long long x, long long m) { return ((x % m) + m) % m; }

}  // namespace

long long triangle_discriminant(const TriangleCounts& c) {
  return 4 * c.n_pqr + c.n_p * c.n_p + c.n_q * c.n_q + c.n_r * c.n_r - 2 * c.n_p * c.n_q -
         2 * c.n_q * c.n_r - 2 * c.n_r * c.n_p;
}

SigmaTau sigma_tau_from_counts(const TriangleCounts& c) {
  SigmaTau st;
  st.sigma = Rational(c.n_p - c.n_q - c.n_r);
  st.tau = Rational(c.n_pqr - c.n_q * c.n_r);
  return st;
}

SigmaTau sigma_tau_shift(const SigmaTau& st, const Rational& r) {
  SigmaTau out;
  out.sigma = st.sigma + Rational(2) * r;
  out.tau = st.tau - st.sigma * r - r * r;
  return out;
}

StructuralSigmaTau sigma_tau_from_structural(const Rational& a11, const Rational& a22,
                                             const Rational& a_prime,
                                             const Rational& a_double_prime) {
  StructuralSigmaTau out;
  out.st.sigma = a_double_prime - a_prime;
  out.st.tau = a_prime * a_double_prime - a11 * a22 / Rational(4);
  const Rational a12 = a_prime + a_double_prime;
  out.determinant_identity_lhs = out.st.discriminant();
  out.determinant_identity_rhs = a12 * a12 - a11 * a22;
  out.identity_holds = out.determinant_identity_lhs == out.determinant_identity_rhs;
  return out;
}

std::vector<Mod2Check> mod2_report(long long delta, const TriangleCounts& c, long long tau) {
  std::vector<Mod2Check> checks;
  const bool delta_odd = mod_pos(delta, 2) == 1;

  {
    Mod2Check ck;
    ck.name = "delta == n_P + n_Q + n_R (mod 2)";
    ck.pass = mod_pos(delta, 2) == mod_pos(c.n_p + c.n_q + c.n_r, 2);
    ck.detail = "delta mod 2 = " + std::to_string(mod_pos(delta, 2)) +
                ", (n_P+n_Q+n_R) mod 2 = " + std::to_string(mod_pos(c.n_p + c.n_q + c.n_r, 2));
    checks.push_back(ck);
  }
  {
    Mod2Check ck;
    ck.name = "delta mod 4 in {0, 1}";
    const long long m = mod_pos(delta, 4);
    ck.pass = m == 0 || m == 1;
    ck.detail = "delta mod 4 = " + std::to_string(m);
    checks.push_back(ck);
  }
  {
    Mod2Check ck;
    ck.name = "tau mod 2 invariant under integer shifts";
    ck.applicable = delta_odd;
    if (delta_odd) {
      const SigmaTau st{Rational(c.n_p - c.n_q - c.n_r), Rational(tau)};
      ck.pass = true;
      for (long long r = -3; r <= 3; ++r) {
        const SigmaTau shifted = sigma_tau_shift(st, Rational(r));
        if (!shifted.tau.is_integer() ||
            mod_pos(shifted.tau.num(), 2) != mod_pos(tau, 2)) {
          ck.pass = false;
          ck.detail = "parity changes at shift r = " + std::to_string(r);
          break;
        }
      }
      if (ck.pass) ck.detail = "tau mod 2 = " + std::to_string(mod_pos(tau, 2)) +
                               " for all r in -3..3";
    } else {
      ck.detail = "delta even: not applicable";
    }
    checks.push_back(ck);
  }
  {
    Mod2Check ck;
    ck.name = "n_P n_Q == n_Q n_R == n_R n_P (mod 2)";
    ck.applicable = delta_odd;
    if (delta_odd) {
      const long long pq = mod_pos(c.n_p * c.n_q, 2);
      const long long qr = mod_pos(c.n_q * c.n_r, 2);
      const long long rp = mod_pos(c.n_r * c.n_p, 2);
      ck.pass = pq == qr && qr == rp;
      ck.detail = "parities (" + std::to_string(pq) + ", " + std::to_string(qr) + ", " +
                  std::to_string(rp) + ")";
    } else {
      ck.detail = "delta even: not applicable";
    }
    checks.push_back(ck);
  }
  {
    Mod2Check ck;
    ck.name = "n_PQR + n_P n_Q == tau (mod 2)";
    ck.applicable = delta_odd;
    if (delta_odd) {
      ck.pass = mod_pos(c.n_pqr + c.n_p * c.n_q, 2) == mod_pos(tau, 2);
      ck.detail = "(n_PQR + n_P n_Q) mod 2 = " + std::to_string(mod_pos(c.n_pqr + c.n_p * c.n_q, 2)) +
                  ", tau mod 2 = " + std::to_string(mod_pos(tau, 2));
    } else {
      ck.detail = "delta even: not applicable";
    }
    checks.push_back(ck);
  }
  return checks;
}

}  // namespace lgcrit
