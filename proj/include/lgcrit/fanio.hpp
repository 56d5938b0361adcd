#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgcrit/fan.hpp"
#include "lgcrit/frobenius.hpp"

namespace lgcrit {

/// Parsed analysis input. When terms are present they override the fan as the
/// superpotential source (non-toric mode); without vectors the
/// polytope-dependent operations are disabled.
struct AnalysisInput {
  std::string name;
  std::optional<FanData> fan;
  std::vector<WeightedTerm> terms;
  std::optional<ClassDictionary> classes;
};

/// Parse the fan JSON:
///   {"name": str, "dim": int, "vectors": [[int,...],...], "labels": [str,...]?,
///    "terms": [{"coeff": [re,im]|number, "exponents": [int,...]}, ...]?,
///    "classes": [{"label": str, "value_terms": [...], "t_power": int}, ...]?,
///    "dual_pairs": [["pt","M"], ["E","E",-1], ...]? }
/// Throws std::invalid_argument with a message on malformed input.
AnalysisInput parse_fan_json(const std::string& text);

AnalysisInput load_fan_file(const std::string& path);

/// Inverse of parse_fan_json for round-trip tests and catalog export.
std::string fan_json_string(const AnalysisInput& input);

}  // namespace lgcrit
