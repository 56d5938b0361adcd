#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lgcrit/critsolve.hpp"
#include "lgcrit/fan.hpp"
#include "lgcrit/laurent.hpp"

namespace lgcrit {

/// One ambient homology class with its image under the ring isomorphism
/// I : QH(M) -> O(W1) tensor Lambda: a Laurent-polynomial value and the formal
/// t power (t is a degree marker, never a number).
struct ClassEntry {
  std::string label;
  PolyC value{1};
  int t_power = 0;
};

/// (a, a^#) with a^# the intersection-dual basis element; sign covers classes
/// with a^# = -a (self-intersection -1).
struct DualPair {
  std::string label;
  std::string dual_label;
  int sign = 1;
};

struct ClassDictionary {
  std::vector<ClassEntry> entries;
  std::vector<DualPair> dual_pairs;

  const ClassEntry* find(const std::string& label) const {
    for (const auto& e : entries)
      if (e.label == label) return &e;
    return nullptr;
  }
};

/// The Morse spectrum: critical points with their discriminant values, the
/// data entering every denominator of the Frobenius trace.
struct PointSpectrum {
  std::vector<CriticalPoint> points;
  std::vector<Complex> delta;

  bool semisimple_data(double threshold = 1e-10) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (!points[i].morse || std::abs(delta[i]) <= threshold) return false;
    return true;
  }
};

PointSpectrum make_spectrum(const SuperpotentialSpec& spec,
                            const std::vector<CriticalPoint>& pts);

/// F(sigma) = (-1)^{n+1} sum_z sigma(z) / Delta(z). Throws std::domain_error
/// when some |Delta| is below threshold (non-semisimple).
Complex frobenius_trace(const PointSpectrum& spectrum, const PolyC& sigma, int n);

struct ResidueRow {
  std::vector<int> subset;  // facet indices, 0-based
  Exponents exponent_sum;   // v_I
  Complex computed{0, 0};
  Complex expected{0, 0};
  bool pass = false;
};

/// All index subsets with 0 <= |I| <= n: computed sum_z z^{v_I}/Delta(z)
/// against 0, or (-1)^{n+1} when |I| = n and the facets meet.
std::vector<ResidueRow> verify_residue_identities(const FanData& fan,
                                                  const PolytopeFacts& facts,
                                                  const PointSpectrum& spectrum,
                                                  double tol = 1e-9);

struct EulerPointReport {
  Complex lhs{0, 0};       // sum_i sign_i I(a_i^#)(z) I(a_i)(z)
  Complex expected{0, 0};  // (-1)^{n+1} Delta(z)
  double abs_error = 0.0;
  bool pass = false;
};

struct EulerCheck {
  bool t_power_audit = false;  // every pair's t powers sum to n
  std::vector<EulerPointReport> per_point;
  bool all_pass = false;
};

/// Quantum-Euler-class identity at every point of the spectrum.
EulerCheck euler_class_check(const ClassDictionary& dict, const PointSpectrum& spectrum, int n,
                             double tol = 1e-8);

struct InclusionRow {
  std::string label;    // basis class a_i
  int t_power = 0;      // of the coefficient I(a_i^#)
  std::vector<Complex> values;  // one per spectrum point
};

/// Coefficient table of i_L([x0]) = [pt] + sum_i I(a_i^#) a_i: evaluates each
/// I(a_i^#) at each critical point.
std::vector<InclusionRow> quantum_inclusion_report(const ClassDictionary& dict,
                                                   const PointSpectrum& spectrum);

enum class SemisimplicityVerdict { kSemisimple, kNotSemisimple, kIncompleteSpectrum };

struct SemisimplicityCheck {
  SemisimplicityVerdict verdict = SemisimplicityVerdict::kNotSemisimple;
  std::string message;
};

SemisimplicityCheck semisimplicity_check(const PointSpectrum& spectrum,
                                         std::optional<int> expected,
                                         double delta_threshold = 1e-10);

}  // namespace lgcrit
