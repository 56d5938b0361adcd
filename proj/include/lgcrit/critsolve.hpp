#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgcrit/fan.hpp"
#include "lgcrit/laurent.hpp"

namespace lgcrit {

struct SolverConfig {
  int starts = 0;  // 0 = auto: max(50, 40 * expected) when expected given, else 500
  std::uint64_t seed = 42;
  double newton_tol = 1e-12;  // residual threshold
  double dedupe_tol = 1e-8;   // relative point distance
  double morse_tol = 1e-10;   // |det H| threshold
  int max_iter = 100;
  double radius_min = 0.2;
  double radius_max = 5.0;
};

struct CriticalPoint {
  TorusPoint point;
  double residual = 0.0;            // max_j |z_j d_j P(z)|
  Complex hessian_det{0.0, 0.0};    // det of H_ij = sum_k nu_k e_k^i e_k^j z^{e_k}
  bool morse = false;
  std::optional<int> multiplicity;  // 1 when Morse, unknown otherwise
};

struct SolveResult {
  std::vector<CriticalPoint> points;  // sorted lexicographically by (Re, Im)
  bool degenerate = false;            // potential identically critical (all g_j = 0)
  std::optional<int> expected;
  bool complete = false;  // found == expected (false when expected unknown)
  bool all_morse = false;
  std::vector<std::string> warnings;
};

/// The n gradient polynomials g_j = z_j dP/dz_j.
std::vector<PolyC> gradient_system(const SuperpotentialSpec& spec);

/// H_ij(z) = sum_k nu_k e_k^i e_k^j z^{e_k}: the Newton Jacobian in log
/// coordinates, the Morse certificate at critical points, and the matrix
/// behind the reference discriminant.
Eigen::MatrixXcd moment_hessian(const SuperpotentialSpec& spec, const TorusPoint& z);

/// Multi-start damped Newton in log coordinates (the Jacobian of g w.r.t.
/// log z is the log-Hessian matrix). Deterministic from cfg.seed: identical
/// (spec, cfg) yields a bit-identical sorted point list.
SolveResult solve_critical_points(const SuperpotentialSpec& spec, const SolverConfig& cfg,
                                  std::optional<int> expected = std::nullopt);

/// Per-point Morse flags from |det H| > morse_tol; global verdict requires
/// all points Morse and, when expected is given, found == expected.
struct MorseCertificate {
  std::vector<bool> point_morse;
  bool all_morse = false;
  bool global = false;
};
MorseCertificate morse_certify(const SuperpotentialSpec& spec, std::vector<CriticalPoint>& pts,
                               const SolverConfig& cfg,
                               std::optional<int> expected = std::nullopt);

}  // namespace lgcrit
