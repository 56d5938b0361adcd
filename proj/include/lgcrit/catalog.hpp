#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lgcrit/fan.hpp"
#include "lgcrit/frobenius.hpp"

namespace lgcrit {

/// One worked example: fan or general term list, the known critical count,
/// the known critical points in closed form, the closed-form discriminant,
/// and (for the toric surfaces and CP^n) the ambient class dictionary.
struct CatalogEntry {
  std::string name;
  std::string description;  // provenance: which manifold / which closed forms
  std::optional<FanData> fan;
  std::vector<WeightedTerm> terms;  // used when fan is absent (non-toric mode)
  std::vector<std::string> axis_labels;
  int expected_count = 0;
  std::vector<TorusPoint> expected_points;
  std::function<Complex(const TorusPoint&)> expected_delta;  // may be empty
  std::string delta_note;  // rendering of the closed form
  std::optional<ClassDictionary> classes;
  std::string note;  // extra caveats surfaced in reports

  SuperpotentialSpec superpotential() const {
    return fan ? build_superpotential(*fan) : general_superpotential(dim(), terms);
  }
  int dim() const {
    return fan ? fan->dim : (terms.empty() ? 0 : static_cast<int>(terms[0].exponents.size()));
  }
};

const std::vector<CatalogEntry>& catalog();

/// nullptr when the name is unknown.
const CatalogEntry* find_catalog(const std::string& name);

/// Roots of a monic polynomial given by ascending coefficients c0..c_{d-1}
/// (for z^d + c_{d-1} z^{d-1} + ... + c0), via the companion matrix. Used to
/// realize catalog closed forms of the shape "roots of p(z) = 0".
std::vector<Complex> univariate_roots(const std::vector<double>& ascending_coeffs);

}  // namespace lgcrit
