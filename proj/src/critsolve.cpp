#include "lgcrit/critsolve.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace lgcrit {

namespace {

// Uniform double in [0,1) hand-rolled from mt19937_64 output so the start
// set is identical across standard library implementations.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double residual_norm(const std::vector<PolyC>& g, const TorusPoint& z) {
  double m = 0.0;
  for (const auto& gj : g) m = std::max(m, std::abs(evaluate(gj, z)));
  return m;
}

// Roundoff bound for evaluating the gradient at z: eps times the sum of
// summand magnitudes. A computed residual below this bound is noise, not a
// certificate (huge monomials can cancel exactly in floating point at points
// that are nowhere near critical).
double residual_noise_floor(const std::vector<PolyC>& g, const TorusPoint& z) {
  constexpr double kEps = 2.220446049250313e-16;
  double worst = 0.0;
  for (const auto& gj : g) {
    double scale = 0.0;
    std::size_t terms = 0;
    for (const auto& [e, c] : gj.terms()) {
      scale += std::abs(c * evaluate(PolyC::monomial(gj.dim(), Complex(1), e), z));
      ++terms;
    }
    worst = std::max(worst, kEps * static_cast<double>(terms + 1) * scale);
  }
  return worst;
}

bool lex_less(const TorusPoint& a, const TorusPoint& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

double relative_distance(const TorusPoint& a, const TorusPoint& b) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]) / (1.0 + std::abs(a[i])));
  return m;
}

}  // namespace

std::vector<PolyC> gradient_system(const SuperpotentialSpec& spec) {
  std::vector<PolyC> g;
  g.reserve(spec.dim);
  for (int j = 0; j < spec.dim; ++j) g.push_back(log_derivative(spec.potential, j));
  return g;
}

Eigen::MatrixXcd moment_hessian(const SuperpotentialSpec& spec, const TorusPoint& z) {
  const int n = spec.dim;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [e, c] : spec.potential.terms()) {
    Complex m = c;
    for (int i = 0; i < n; ++i) {
      const int k = e[i];
      if (k == 0) continue;
      const Complex base = k > 0 ? z[i] : Complex(1) / z[i];
      for (int rep = 0; rep < std::abs(k); ++rep) m *= base;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (e[i] != 0 && e[j] != 0) h(i, j) += m * Complex(e[i] * e[j]);
  }
  return h;
}

SolveResult solve_critical_points(const SuperpotentialSpec& spec, const SolverConfig& cfg,
                                  std::optional<int> expected) {
  const int n = spec.dim;
  SolveResult result;
  result.expected = expected;

  const auto g = gradient_system(spec);
  if (std::all_of(g.begin(), g.end(), [](const PolyC& p) { return p.is_zero(); })) {
    result.degenerate = true;
    result.warnings.push_back("degenerate: identically critical (all gradients vanish)");
    return result;
  }

  int starts = cfg.starts;
  if (starts <= 0) starts = expected ? std::max(50, 40 * *expected) : 500;

  std::mt19937_64 rng(cfg.seed);
  const double log_rmin = std::log(cfg.radius_min);
  const double log_rmax = std::log(cfg.radius_max);
  constexpr double kTwoPi = 6.283185307179586476925286766559;

  std::vector<TorusPoint> found;
  for (int s = 0; s < starts; ++s) {
    TorusPoint z(n);
    for (int i = 0; i < n; ++i) {
      const double radius = std::exp(log_rmin + (log_rmax - log_rmin) * next_unit(rng));
      const double angle = kTwoPi * next_unit(rng);
      z[i] = Complex(radius * std::cos(angle), radius * std::sin(angle));
    }

    bool dead = false;
    double res = residual_norm(g, z);
    for (int iter = 0; iter < cfg.max_iter && res >= cfg.newton_tol; ++iter) {
      Eigen::VectorXcd gv(n);
      for (int j = 0; j < n; ++j) gv[j] = evaluate(g[j], z);
      const Eigen::MatrixXcd jac = moment_hessian(spec, z);
      Eigen::PartialPivLU<Eigen::MatrixXcd> lu(jac);
      Eigen::VectorXcd step = lu.solve(-gv);
      if (!step.allFinite()) {
        dead = true;
        break;
      }
      // damping: halve the log-space step while the residual grows
      bool accepted = false;
      for (int halving = 0; halving <= 20; ++halving) {
        TorusPoint znew(n);
        bool zero_coord = false;
        for (int i = 0; i < n; ++i) {
          znew[i] = z[i] * std::exp(step[i]);
          if (znew[i] == Complex(0) || !std::isfinite(std::abs(znew[i]))) zero_coord = true;
        }
        if (!zero_coord) {
          const double rnew = residual_norm(g, znew);
          if (rnew < res) {
            z = znew;
            res = rnew;
            accepted = true;
            break;
          }
        }
        step *= 0.5;
      }
      if (!accepted) {
        dead = true;
        break;
      }
    }
    if (dead || res >= cfg.newton_tol) continue;
    if (z.cwiseAbs().minCoeff() < 1e-6) continue;  // outside (C*)^n
    if (res + residual_noise_floor(g, z) >= cfg.newton_tol) continue;  // uncertifiable

    // polish: a few extra full Newton steps while the residual still drops
    for (int extra = 0; extra < 3; ++extra) {
      Eigen::VectorXcd gv(n);
      for (int j = 0; j < n; ++j) gv[j] = evaluate(g[j], z);
      Eigen::PartialPivLU<Eigen::MatrixXcd> lu(moment_hessian(spec, z));
      const Eigen::VectorXcd step = lu.solve(-gv);
      if (!step.allFinite()) break;
      TorusPoint znew(n);
      bool bad = false;
      for (int i = 0; i < n; ++i) {
        znew[i] = z[i] * std::exp(step[i]);
        if (znew[i] == Complex(0) || !std::isfinite(std::abs(znew[i]))) bad = true;
      }
      if (bad) break;
      const double rnew = residual_norm(g, znew);
      if (rnew >= res) break;
      z = znew;
      res = rnew;
    }
    found.push_back(z);
  }

  std::sort(found.begin(), found.end(), lex_less);
  std::vector<TorusPoint> unique_pts;
  for (const auto& z : found) {
    bool dup = false;
    for (const auto& w : unique_pts)
      if (relative_distance(w, z) < cfg.dedupe_tol) {
        dup = true;
        break;
      }
    if (!dup) unique_pts.push_back(z);
  }

  for (const auto& z : unique_pts) {
    CriticalPoint cp;
    cp.point = z;
    cp.residual = residual_norm(g, z);
    result.points.push_back(std::move(cp));
  }
  if (result.points.empty())
    result.warnings.push_back("no convergent start; empty critical set reported");

  const auto cert = morse_certify(spec, result.points, cfg, expected);
  result.all_morse = cert.all_morse;
  result.complete = expected && static_cast<int>(result.points.size()) == *expected;
  return result;
}

MorseCertificate morse_certify(const SuperpotentialSpec& spec, std::vector<CriticalPoint>& pts,
                               const SolverConfig& cfg, std::optional<int> expected) {
  MorseCertificate cert;
  cert.all_morse = true;
  for (auto& cp : pts) {
    const Eigen::MatrixXcd h = moment_hessian(spec, cp.point);
    cp.hessian_det = h.determinant();
    cp.morse = std::abs(cp.hessian_det) > cfg.morse_tol;
    cp.multiplicity = cp.morse ? std::optional<int>(1) : std::nullopt;
    cert.point_morse.push_back(cp.morse);
    cert.all_morse = cert.all_morse && cp.morse;
  }
  cert.global =
      cert.all_morse && (!expected || static_cast<int>(pts.size()) == *expected);
  return cert;
}

}  // namespace lgcrit
