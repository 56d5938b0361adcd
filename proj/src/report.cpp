#include "lgcrit/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace lgcrit {

namespace {

using nlohmann::json;

json complex_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

std::string subset_string(const std::vector<int>& subset) {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i] + 1);
  }
  return s + "}";
}

std::string monomial_string(const Exponents& e) {
  PolyC m = PolyC::monomial(static_cast<int>(e.size()), Complex(1), e);
  return to_string(m);
}

AnalysisReport analyze_impl(const AnalysisInput& input, const SolverConfig& cfg,
                            std::optional<int> expected_override, double check_tol,
                            const CatalogEntry* entry) {
  AnalysisReport rep;
  rep.source = input.name;
  rep.cfg = cfg;
  rep.check_tol = check_tol;
  if (entry) rep.note = entry->note;

  const bool general_mode = !input.terms.empty();
  rep.mode = general_mode ? "general" : "toric";

  std::optional<FanData> fan = input.fan;
  if (!general_mode && !fan) {
    rep.input_error = true;
    rep.errors.push_back("no superpotential source: need facet vectors or a term list");
    return rep;
  }

  std::optional<PolytopeFacts> facts;
  if (fan) {
    const auto validation = validate_fan(*fan);
    rep.info = validation.info;
    if (!validation.valid) {
      rep.input_error = true;
      rep.errors = validation.errors;
      return rep;
    }
  }

  SuperpotentialSpec spec;
  try {
    spec = general_mode ? general_superpotential(
                              static_cast<int>(input.terms[0].exponents.size()), input.terms)
                        : build_superpotential(*fan);
  } catch (const std::exception& err) {
    rep.input_error = true;
    rep.errors.push_back(err.what());
    return rep;
  }

  // input echo
  if (fan && !general_mode) {
    std::string echo = "facet normals:";
    const bool labeled = fan->labels.size() == fan->vectors.size();
    for (std::size_t k = 0; k < fan->vectors.size(); ++k) {
      echo += " ";
      if (labeled) echo += fan->labels[k] + "=";
      echo += "(";
      const auto& v = fan->vectors[k];
      for (std::size_t i = 0; i < v.size(); ++i)
        echo += (i ? "," : "") + std::to_string(v[i]);
      echo += ")";
    }
    rep.info.push_back(echo);
  } else {
    rep.info.push_back("weighted terms: " + std::to_string(input.terms.size()) +
                       " supplied, collected into " +
                       std::to_string(spec.potential.term_count()) + " monomials");
  }
  rep.superpotential = to_string(spec.potential);
  const int n = spec.dim;

  if (fan && !general_mode) {
    const auto w2 = wide_variety_2(*fan);
    W2Section section;
    section.free_indices = w2.free_indices;
    for (const auto& b : w2.basis) {
      std::vector<std::string> row;
      for (const auto& x : b) row.push_back(x.str());
      section.basis.push_back(std::move(row));
    }
    for (int k = 0; k < fan->facet_count(); ++k) {
      const std::string form = linear_form_string(w2.coordinate_forms[k], w2.free_indices);
      section.coordinate_forms.push_back(form);
      const std::string constraint = form + " != 0";
      if (std::find(section.constraints.begin(), section.constraints.end(), constraint) ==
          section.constraints.end())
        section.constraints.push_back(constraint);
    }
    for (const auto& m : w2.boundary_monomials)
      section.boundary_monomials.push_back(to_string(m));
    rep.w2 = std::move(section);

    facts = polytope_vertices(*fan);
    rep.expected_count = expected_critical_count(*facts);
  }
  if (expected_override) rep.expected_count = expected_override;

  rep.solve = solve_critical_points(spec, cfg, rep.expected_count);
  const PointSpectrum spectrum = make_spectrum(spec, rep.solve.points);

  for (std::size_t i = 0; i < rep.solve.points.size(); ++i) {
    DeltaRow row;
    row.vector = spectrum.delta[i];
    const auto hd = discriminant_hessian(spec, rep.solve.points[i].point);
    row.hessian = hd.value;
    row.hessian_gap = std::abs(row.hessian - row.vector);
    if (!general_mode) {
      row.minorsum = discriminant_minorsum(*fan, rep.solve.points[i].point);
      row.minorsum_gap = std::abs(*row.minorsum - row.vector);
    }
    rep.delta_rows.push_back(std::move(row));
  }

  const bool spectrum_ok = spectrum.semisimple_data();

  rep.residues_applicable = !general_mode && spectrum_ok && !rep.solve.points.empty();
  if (rep.residues_applicable)
    rep.residues = verify_residue_identities(*fan, *facts, spectrum, check_tol);

  const ClassDictionary* dict = nullptr;
  if (input.classes && !input.classes->dual_pairs.empty())
    dict = &*input.classes;
  else if (entry && entry->classes)
    dict = &*entry->classes;

  rep.euler_applicable = dict && spectrum_ok && !rep.solve.points.empty();
  if (rep.euler_applicable) rep.euler = euler_class_check(*dict, spectrum, n, 1e-8);
  rep.inclusion_applicable = rep.euler_applicable;
  if (rep.inclusion_applicable) rep.inclusion = quantum_inclusion_report(*dict, spectrum);

  rep.semisimplicity = semisimplicity_check(spectrum, rep.expected_count);

  // aggregated pass/fail lines; these drive the exit code
  {
    CheckLine c;
    c.name = "completeness (found == expected)";
    c.applicable = rep.expected_count.has_value();
    c.pass = c.applicable && static_cast<int>(rep.solve.points.size()) == *rep.expected_count;
    c.detail = "found " + std::to_string(rep.solve.points.size()) +
               (rep.expected_count ? ", expected " + std::to_string(*rep.expected_count)
                                   : ", expected unknown");
    rep.checks.push_back(c);
  }
  {
    CheckLine c;
    c.name = "all points Morse";
    c.applicable = !rep.solve.points.empty();
    c.pass = rep.solve.all_morse;
    c.detail = std::to_string(rep.solve.points.size()) + " points";
    rep.checks.push_back(c);
  }
  {
    CheckLine c;
    c.name = "residual below newton_tol at every point";
    c.applicable = !rep.solve.points.empty();
    c.pass = std::all_of(rep.solve.points.begin(), rep.solve.points.end(),
                         [&](const CriticalPoint& p) { return p.residual < cfg.newton_tol; });
    rep.checks.push_back(c);
  }
  {
    CheckLine c;
    c.name = "discriminant cross-check: hessian formula vs reference";
    c.applicable = !rep.delta_rows.empty();
    c.pass = std::all_of(rep.delta_rows.begin(), rep.delta_rows.end(),
                         [&](const DeltaRow& r) { return r.hessian_gap < 1e-8; });
    rep.checks.push_back(c);
  }
  {
    CheckLine c;
    c.name = "discriminant cross-check: minor sum vs reference";
    c.applicable = !general_mode && !rep.delta_rows.empty();
    c.pass = c.applicable && std::all_of(rep.delta_rows.begin(), rep.delta_rows.end(),
                                         [&](const DeltaRow& r) {
                                           return r.minorsum_gap && *r.minorsum_gap < 1e-8;
                                         });
    if (!c.applicable) c.detail = "not applicable (non-toric)";
    rep.checks.push_back(c);
  }
  {
    CheckLine c;
    c.name = "residue identities";
    c.applicable = rep.residues_applicable;
    c.pass = c.applicable && std::all_of(rep.residues.begin(), rep.residues.end(),
                                         [](const ResidueRow& r) { return r.pass; });
    if (!c.applicable) c.detail = "not applicable (non-toric or degenerate spectrum)";
    rep.checks.push_back(c);
  }
  {
    CheckLine c;
    c.name = "quantum Euler class identity";
    c.applicable = rep.euler_applicable;
    c.pass = c.applicable && rep.euler.all_pass;
    if (!c.applicable) c.detail = "not applicable (no class data)";
    rep.checks.push_back(c);
  }
  {
    CheckLine c;
    c.name = "semisimplicity";
    c.applicable = rep.expected_count.has_value();
    c.pass = rep.semisimplicity.verdict == SemisimplicityVerdict::kSemisimple;
    c.detail = rep.semisimplicity.message;
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace

int AnalysisReport::exit_code() const {
  if (input_error) return 1;
  for (const auto& c : checks)
    if (c.applicable && !c.pass) return 2;
  return 0;
}

AnalysisReport analyze(const AnalysisInput& input, const SolverConfig& cfg,
                       std::optional<int> expected_override, double check_tol) {
  return analyze_impl(input, cfg, expected_override, check_tol, nullptr);
}

AnalysisReport analyze_catalog(const CatalogEntry& entry, const SolverConfig& cfg,
                               std::optional<int> expected_override, double check_tol) {
  AnalysisInput input;
  input.name = entry.name;
  input.fan = entry.fan;
  input.terms = entry.terms;
  std::optional<int> expected = expected_override;
  if (!expected) expected = entry.expected_count;
  return analyze_impl(input, cfg, expected, check_tol, &entry);
}

std::string format_complex(const Complex& c) {
  if (c.imag() == 0.0) return detail::format_double(c.real());
  std::string s = detail::format_double(c.real());
  s += c.imag() < 0 ? " - " : " + ";
  s += detail::format_double(std::abs(c.imag())) + "i";
  return s;
}

std::string render_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "== analysis: " << rep.source << " (" << rep.mode << " mode) ==\n";
  if (rep.input_error) {
    for (const auto& e : rep.errors) os << "error: " << e << "\n";
    return os.str();
  }
  for (const auto& i : rep.info) os << "info: " << i << "\n";
  os << "superpotential: " << rep.superpotential << "\n";
  if (rep.expected_count) os << "expected |W1|: " << *rep.expected_count << "\n";

  if (rep.w2) {
    os << "\nW2 parametrization (free parameters:";
    for (int k : rep.w2->free_indices) os << " xi" << k + 1;
    os << "):\n  nullspace basis:";
    for (const auto& b : rep.w2->basis) {
      os << " (";
      for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
      os << ")";
    }
    os << "\n  xi = (";
    for (std::size_t k = 0; k < rep.w2->coordinate_forms.size(); ++k) {
      if (k) os << ", ";
      os << rep.w2->coordinate_forms[k];
    }
    os << ")\n  constraints: ";
    for (std::size_t k = 0; k < rep.w2->constraints.size(); ++k) {
      if (k) os << ", ";
      os << rep.w2->constraints[k];
    }
    os << "\n  boundary map d_W: z -> (";
    for (std::size_t k = 0; k < rep.w2->boundary_monomials.size(); ++k) {
      if (k) os << ", ";
      os << rep.w2->boundary_monomials[k];
    }
    os << ")\n";
  }

  os << "\ncritical points (" << rep.solve.points.size() << " found):\n";
  for (std::size_t i = 0; i < rep.solve.points.size(); ++i) {
    const auto& p = rep.solve.points[i];
    os << "  [" << i << "] (";
    for (Eigen::Index k = 0; k < p.point.size(); ++k) {
      if (k) os << ", ";
      os << format_complex(p.point[k]);
    }
    os << ")  residual " << detail::format_double(p.residual) << "  det H = "
       << format_complex(p.hessian_det) << "  " << (p.morse ? "Morse" : "NOT Morse");
    if (!p.multiplicity) os << " (multiplicity unknown)";
    os << "\n";
  }
  for (const auto& w : rep.solve.warnings) os << "  warning: " << w << "\n";

  if (!rep.delta_rows.empty()) {
    os << "\ndiscriminant per point:\n";
    for (std::size_t i = 0; i < rep.delta_rows.size(); ++i) {
      const auto& r = rep.delta_rows[i];
      os << "  [" << i << "] vector: " << format_complex(r.vector)
         << "  hessian: " << format_complex(r.hessian)
         << " (gap " << detail::format_double(r.hessian_gap) << ")";
      if (r.minorsum)
        os << "  minorsum: " << format_complex(*r.minorsum) << " (gap "
           << detail::format_double(*r.minorsum_gap) << ")";
      os << "\n";
    }
  }

  if (rep.residues_applicable) {
    os << "\nresidue identity table (sum_z z^{v_I} / Delta(z)):\n";
    for (const auto& row : rep.residues) {
      os << "  I=" << subset_string(row.subset) << " " << monomial_string(row.exponent_sum)
         << ": computed " << format_complex(row.computed) << ", expected "
         << format_complex(row.expected) << " -> " << (row.pass ? "pass" : "FAIL") << "\n";
    }
  } else {
    os << "\nresidue identity table: not applicable"
       << (rep.mode == "general" ? " (non-toric)" : "") << "\n";
  }

  if (rep.euler_applicable) {
    os << "\nquantum Euler class identity (sum_i I(a_i^#) I(a_i) = (-1)^{n+1} Delta):\n";
    os << "  t-power audit: " << (rep.euler.t_power_audit ? "pass" : "FAIL") << "\n";
    for (std::size_t i = 0; i < rep.euler.per_point.size(); ++i) {
      const auto& e = rep.euler.per_point[i];
      os << "  [" << i << "] lhs " << format_complex(e.lhs) << ", expected "
         << format_complex(e.expected) << ", |err| " << detail::format_double(e.abs_error)
         << " -> " << (e.pass ? "pass" : "FAIL") << "\n";
    }
  } else {
    os << "\nquantum Euler class identity: not applicable (no class data)\n";
  }

  if (rep.inclusion_applicable) {
    os << "\nquantum inclusion coefficients per point (i_L([x0]) rows):\n";
    for (const auto& row : rep.inclusion) {
      os << "  " << row.label << " (t^" << row.t_power << "):";
      for (const auto& v : row.values) os << "  " << format_complex(v);
      os << "\n";
    }
  }

  os << "\nsemisimplicity: " << rep.semisimplicity.message << "\n";
  if (!rep.note.empty()) os << "note: " << rep.note << "\n";

  os << "\nchecks (tolerance " << detail::format_double(rep.check_tol) << "):\n";
  for (const auto& c : rep.checks) {
    os << "  [" << (c.applicable ? (c.pass ? "PASS" : "FAIL") : "n/a ") << "] " << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
  }
  return os.str();
}

std::string render_json(const AnalysisReport& rep) {
  json j;
  j["source"] = rep.source;
  j["mode"] = rep.mode;
  j["input_error"] = rep.input_error;
  j["errors"] = rep.errors;
  if (rep.input_error) return j.dump(2) + "\n";

  j["info"] = rep.info;
  j["superpotential"] = rep.superpotential;
  j["tolerances"] = {{"check_tol", rep.check_tol},
                     {"newton_tol", rep.cfg.newton_tol},
                     {"dedupe_tol", rep.cfg.dedupe_tol},
                     {"morse_tol", rep.cfg.morse_tol}};
  j["solver"] = {{"starts", rep.cfg.starts},
                 {"seed", rep.cfg.seed},
                 {"max_iter", rep.cfg.max_iter},
                 {"radius_range", {rep.cfg.radius_min, rep.cfg.radius_max}}};
  j["expected_count"] = rep.expected_count ? json(*rep.expected_count) : json(nullptr);

  if (rep.w2) {
    json w2;
    json free = json::array();
    for (int k : rep.w2->free_indices) free.push_back(k + 1);
    w2["free_parameters"] = free;
    w2["nullspace_basis"] = rep.w2->basis;
    w2["coordinate_forms"] = rep.w2->coordinate_forms;
    w2["constraints"] = rep.w2->constraints;
    w2["boundary_map"] = rep.w2->boundary_monomials;
    j["w2"] = w2;
  } else {
    j["w2"] = nullptr;
  }

  json points = json::array();
  for (std::size_t i = 0; i < rep.solve.points.size(); ++i) {
    const auto& p = rep.solve.points[i];
    json pj;
    json coords = json::array();
    for (Eigen::Index k = 0; k < p.point.size(); ++k) coords.push_back(complex_json(p.point[k]));
    pj["z"] = coords;
    pj["residual"] = p.residual;
    pj["morse"] = p.morse;
    pj["multiplicity"] = p.multiplicity ? json(*p.multiplicity) : json("unknown");
    pj["hessian_det"] = complex_json(p.hessian_det);
    const auto& r = rep.delta_rows[i];
    json dj;
    dj["vector"] = complex_json(r.vector);
    dj["hessian"] = complex_json(r.hessian);
    dj["hessian_gap"] = r.hessian_gap;
    dj["minorsum"] = r.minorsum ? complex_json(*r.minorsum) : json(nullptr);
    dj["minorsum_gap"] = r.minorsum_gap ? json(*r.minorsum_gap) : json(nullptr);
    pj["delta"] = dj;
    points.push_back(pj);
  }
  j["points"] = points;
  j["warnings"] = rep.solve.warnings;

  json residues;
  residues["applicable"] = rep.residues_applicable;
  json rows = json::array();
  for (const auto& row : rep.residues) {
    json rj;
    json subset = json::array();
    for (int k : row.subset) subset.push_back(k + 1);
    rj["subset"] = subset;
    rj["monomial"] = monomial_string(row.exponent_sum);
    rj["computed"] = complex_json(row.computed);
    rj["expected"] = complex_json(row.expected);
    rj["pass"] = row.pass;
    rows.push_back(rj);
  }
  residues["rows"] = rows;
  j["residue_table"] = residues;

  json euler;
  euler["applicable"] = rep.euler_applicable;
  if (rep.euler_applicable) {
    euler["t_power_audit"] = rep.euler.t_power_audit;
    json per_point = json::array();
    for (const auto& e : rep.euler.per_point) {
      json ej;
      ej["lhs"] = complex_json(e.lhs);
      ej["expected"] = complex_json(e.expected);
      ej["abs_error"] = e.abs_error;
      ej["pass"] = e.pass;
      per_point.push_back(ej);
    }
    euler["per_point"] = per_point;
  }
  j["euler_check"] = euler;

  json inclusion;
  inclusion["applicable"] = rep.inclusion_applicable;
  if (rep.inclusion_applicable) {
    json irows = json::array();
    for (const auto& row : rep.inclusion) {
      json ij;
      ij["label"] = row.label;
      ij["t_power"] = row.t_power;
      json vals = json::array();
      for (const auto& v : row.values) vals.push_back(complex_json(v));
      ij["values"] = vals;
      irows.push_back(ij);
    }
    inclusion["rows"] = irows;
  }
  j["quantum_inclusion"] = inclusion;

  const char* verdict = rep.semisimplicity.verdict == SemisimplicityVerdict::kSemisimple
                            ? "semisimple"
                            : (rep.semisimplicity.verdict ==
                                       SemisimplicityVerdict::kIncompleteSpectrum
                                   ? "incomplete spectrum"
                                   : "not semisimple");
  j["semisimplicity"] = {{"verdict", verdict}, {"message", rep.semisimplicity.message}};

  json checks = json::array();
  for (const auto& c : rep.checks) {
    json cj;
    cj["name"] = c.name;
    cj["applicable"] = c.applicable;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  if (!rep.note.empty()) j["note"] = rep.note;
  j["exit_code"] = rep.exit_code();
  return j.dump(2) + "\n";
}

}  // namespace lgcrit
