#include "lgcrit/frobenius.hpp"

#include <stdexcept>

#include "lgcrit/invariants.hpp"

namespace lgcrit {

namespace {

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

constexpr double kDeltaThreshold = 1e-10;

void require_semisimple(const PointSpectrum& spectrum) {
  if (spectrum.points.size() != spectrum.delta.size())
    throw std::invalid_argument("spectrum: points/delta size mismatch");
  for (std::size_t i = 0; i < spectrum.points.size(); ++i) {
    if (std::abs(spectrum.delta[i]) <= kDeltaThreshold)
      throw std::domain_error("spectrum is not semisimple: |Delta| below threshold at point " +
                              std::to_string(i));
    if (!spectrum.points[i].morse)
      throw std::domain_error("spectrum is not semisimple: non-Morse point " +
                              std::to_string(i));
  }
}

}  // namespace

PointSpectrum make_spectrum(const SuperpotentialSpec& spec,
                            const std::vector<CriticalPoint>& pts) {
  PointSpectrum s;
  s.points = pts;
  s.delta.reserve(pts.size());
  for (const auto& cp : pts) s.delta.push_back(discriminant_vector(spec, cp.point));
  return s;
}

Complex frobenius_trace(const PointSpectrum& spectrum, const PolyC& sigma, int n) {
  require_semisimple(spectrum);
  Complex sum(0);
  for (std::size_t i = 0; i < spectrum.points.size(); ++i)
    sum += evaluate(sigma, spectrum.points[i].point) / spectrum.delta[i];
  return Complex(parity_sign(n + 1)) * sum;
}

std::vector<ResidueRow> verify_residue_identities(const FanData& fan,
                                                  const PolytopeFacts& facts,
                                                  const PointSpectrum& spectrum, double tol) {
  require_semisimple(spectrum);
  const int n = fan.dim;
  const int r = fan.facet_count();
  std::vector<ResidueRow> rows;

  std::vector<std::vector<int>> subsets{{}};
  for (int size = 1; size <= n; ++size) {
    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    if (r < size) break;
    while (true) {
      subsets.push_back(comb);
      int i = size - 1;
      while (i >= 0 && comb[i] == r - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }

  for (const auto& subset : subsets) {
    ResidueRow row;
    row.subset = subset;
    Exponents vi(n, 0);
    for (int k : subset)
      for (int i = 0; i < n; ++i) vi[i] += fan.vectors[k][i];
    row.exponent_sum = vi;

    const PolyC mono = PolyC::monomial(n, Complex(1), vi);
    Complex sum(0);
    for (std::size_t p = 0; p < spectrum.points.size(); ++p)
      sum += evaluate(mono, spectrum.points[p].point) / spectrum.delta[p];
    row.computed = sum;

    row.expected = Complex(0);
    if (static_cast<int>(subset.size()) == n) {
      const std::set<int> iset(subset.begin(), subset.end());
      if (facet_intersection_nonempty(facts, iset, n))
        row.expected = Complex(parity_sign(n + 1));
    }
    row.pass = std::abs(row.computed - row.expected) < tol;
    rows.push_back(std::move(row));
  }
  return rows;
}

EulerCheck euler_class_check(const ClassDictionary& dict, const PointSpectrum& spectrum, int n,
                             double tol) {
  require_semisimple(spectrum);
  EulerCheck check;
  check.t_power_audit = true;
  struct Pair {
    const ClassEntry* a;
    const ClassEntry* dual;
    int sign;
  };
  std::vector<Pair> pairs;
  for (const auto& dp : dict.dual_pairs) {
    const ClassEntry* a = dict.find(dp.label);
    const ClassEntry* d = dict.find(dp.dual_label);
    if (!a || !d)
      throw std::invalid_argument("euler_class_check: missing dual pair entry '" + dp.label +
                                  "' / '" + dp.dual_label + "'");
    if (a->t_power + d->t_power != n) check.t_power_audit = false;
    pairs.push_back({a, d, dp.sign});
  }

  check.all_pass = check.t_power_audit;
  for (std::size_t p = 0; p < spectrum.points.size(); ++p) {
    const TorusPoint& z = spectrum.points[p].point;
    EulerPointReport rep;
    Complex lhs(0);
    for (const auto& pr : pairs)
      lhs += Complex(pr.sign) * evaluate(pr.dual->value, z) * evaluate(pr.a->value, z);
    rep.lhs = lhs;
    rep.expected = Complex(parity_sign(n + 1)) * spectrum.delta[p];
    rep.abs_error = std::abs(rep.lhs - rep.expected);
    rep.pass = rep.abs_error < tol;
    check.all_pass = check.all_pass && rep.pass;
    check.per_point.push_back(rep);
  }
  return check;
}

std::vector<InclusionRow> quantum_inclusion_report(const ClassDictionary& dict,
                                                   const PointSpectrum& spectrum) {
  std::vector<InclusionRow> rows;
  for (const auto& dp : dict.dual_pairs) {
    const ClassEntry* a = dict.find(dp.label);
    const ClassEntry* d = dict.find(dp.dual_label);
    if (!a || !d)
      throw std::invalid_argument("quantum_inclusion_report: missing label '" + dp.label +
                                  "' or '" + dp.dual_label + "'");
    InclusionRow row;
    row.label = a->label;
    row.t_power = d->t_power;
    for (const auto& cp : spectrum.points)
      row.values.push_back(Complex(dp.sign) * evaluate(d->value, cp.point));
    rows.push_back(std::move(row));
  }
  return rows;
}

SemisimplicityCheck semisimplicity_check(const PointSpectrum& spectrum,
                                         std::optional<int> expected, double delta_threshold) {
  SemisimplicityCheck check;
  if (expected && static_cast<int>(spectrum.points.size()) != *expected) {
    check.verdict = SemisimplicityVerdict::kIncompleteSpectrum;
    check.message = "incomplete spectrum: found " + std::to_string(spectrum.points.size()) +
                    ", expected " + std::to_string(*expected) +
                    " (no semisimplicity claim)";
    return check;
  }
  for (std::size_t i = 0; i < spectrum.points.size(); ++i) {
    if (!spectrum.points[i].morse) {
      check.verdict = SemisimplicityVerdict::kNotSemisimple;
      check.message = "non-Morse critical point " + std::to_string(i);
      return check;
    }
    if (std::abs(spectrum.delta[i]) <= delta_threshold) {
      check.verdict = SemisimplicityVerdict::kNotSemisimple;
      check.message = "vanishing discriminant at point " + std::to_string(i);
      return check;
    }
  }
  check.verdict = SemisimplicityVerdict::kSemisimple;
  check.message = "semisimple: all points Morse with nonvanishing discriminant";
  return check;
}

}  // namespace lgcrit
