#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgcrit/catalog.hpp"
#include "lgcrit/critsolve.hpp"
#include "lgcrit/fanio.hpp"
#include "lgcrit/frobenius.hpp"
#include "lgcrit/invariants.hpp"

namespace lgcrit {

struct CheckLine {
  std::string name;
  bool applicable = true;
  bool pass = false;
  std::string detail;
};

struct DeltaRow {
  Complex vector{0, 0};
  Complex hessian{0, 0};
  double hessian_gap = 0.0;
  std::optional<Complex> minorsum;
  std::optional<double> minorsum_gap;
};

struct W2Section {
  std::vector<int> free_indices;               // 0-based facet indices
  std::vector<std::vector<std::string>> basis; // exact rational nullspace basis
  std::vector<std::string> coordinate_forms;   // xi_k as linear forms
  std::vector<std::string> constraints;        // nonvanishing conditions, deduped
  std::vector<std::string> boundary_monomials; // d_W components z^{v_k}
};

/// Full per-example output of the pipeline. Renders to text and JSON with
/// identical numeric content; wall-clock timing is deliberately not part of
/// the report so identical invocations serialize byte-identically.
struct AnalysisReport {
  std::string source;
  std::string mode;  // "toric" or "general"
  bool input_error = false;
  std::vector<std::string> errors;
  std::vector<std::string> info;
  std::string superpotential;
  std::optional<W2Section> w2;
  std::optional<int> expected_count;
  SolveResult solve;
  std::vector<DeltaRow> delta_rows;  // parallel to solve.points
  bool residues_applicable = false;
  std::vector<ResidueRow> residues;
  bool euler_applicable = false;
  EulerCheck euler;
  bool inclusion_applicable = false;
  std::vector<InclusionRow> inclusion;
  SemisimplicityCheck semisimplicity;
  std::vector<CheckLine> checks;
  double check_tol = 1e-9;
  SolverConfig cfg;
  std::string note;

  /// 0 all applicable checks pass, 1 input error, 2 check failure.
  int exit_code() const;
};

AnalysisReport analyze(const AnalysisInput& input, const SolverConfig& cfg,
                       std::optional<int> expected_override = std::nullopt,
                       double check_tol = 1e-9);

/// Catalog entries carry their expected counts, dictionaries and notes.
AnalysisReport analyze_catalog(const CatalogEntry& entry, const SolverConfig& cfg,
                               std::optional<int> expected_override = std::nullopt,
                               double check_tol = 1e-9);

std::string render_text(const AnalysisReport& report);
std::string render_json(const AnalysisReport& report);

std::string format_complex(const Complex& c);

}  // namespace lgcrit
