#include "lgcrit/fanio.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace lgcrit {

namespace {

using nlohmann::json;

Complex parse_coeff(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw std::invalid_argument("fan json: coefficient must be a number or [re, im]");
}

Exponents parse_exponents(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw std::invalid_argument("fan json: exponents must be a length-dim integer array");
  Exponents e;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw std::invalid_argument("fan json: exponent entries must be integers");
    e.push_back(x.get<int>());
  }
  return e;
}

}  // namespace

AnalysisInput parse_fan_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("fan json: parse error: ") + err.what());
  }
  AnalysisInput input;
  input.name = j.value("name", std::string("unnamed"));
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw std::invalid_argument("fan json: missing integer field 'dim'");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw std::invalid_argument("fan json: dim must be >= 1");

  if (j.contains("vectors")) {
    FanData fan;
    fan.dim = dim;
    for (const auto& row : j["vectors"]) fan.vectors.push_back(parse_exponents(row, dim));
    if (j.contains("labels")) {
      for (const auto& l : j["labels"]) fan.labels.push_back(l.get<std::string>());
      if (fan.labels.size() != fan.vectors.size())
        throw std::invalid_argument("fan json: labels/vectors length mismatch");
    }
    input.fan = std::move(fan);
  }

  if (j.contains("terms")) {
    for (const auto& t : j["terms"]) {
      WeightedTerm term;
      term.coeff = parse_coeff(t.at("coeff"));
      term.exponents = parse_exponents(t.at("exponents"), dim);
      input.terms.push_back(std::move(term));
    }
  }
  if (!input.fan && input.terms.empty())
    throw std::invalid_argument("fan json: need 'vectors' or 'terms'");

  if (j.contains("classes")) {
    ClassDictionary dict;
    for (const auto& c : j["classes"]) {
      ClassEntry entry;
      entry.label = c.at("label").get<std::string>();
      entry.t_power = c.at("t_power").get<int>();
      PolyC value(dim);
      for (const auto& t : c.at("value_terms"))
        value.add_term(parse_exponents(t.at("exponents"), dim), parse_coeff(t.at("coeff")));
      entry.value = value;
      dict.entries.push_back(std::move(entry));
    }
    if (j.contains("dual_pairs")) {
      for (const auto& p : j["dual_pairs"]) {
        if (!p.is_array() || p.size() < 2)
          throw std::invalid_argument("fan json: dual pair must be [a, a_sharp] or [a, a_sharp, sign]");
        DualPair dp;
        dp.label = p[0].get<std::string>();
        dp.dual_label = p[1].get<std::string>();
        dp.sign = p.size() > 2 ? p[2].get<int>() : 1;
        dict.dual_pairs.push_back(std::move(dp));
      }
    }
    input.classes = std::move(dict);
  }
  return input;
}

AnalysisInput load_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fan_json(buf.str());
}

std::string fan_json_string(const AnalysisInput& input) {
  json j;
  j["name"] = input.name;
  int dim = input.fan ? input.fan->dim
                      : static_cast<int>(input.terms.at(0).exponents.size());
  j["dim"] = dim;
  if (input.fan) {
    json vectors = json::array();
    for (const auto& v : input.fan->vectors) vectors.push_back(v);
    j["vectors"] = vectors;
    if (!input.fan->labels.empty()) j["labels"] = input.fan->labels;
  }
  if (!input.terms.empty()) {
    json terms = json::array();
    for (const auto& t : input.terms) {
      json term;
      term["coeff"] = {t.coeff.real(), t.coeff.imag()};
      term["exponents"] = t.exponents;
      terms.push_back(term);
    }
    j["terms"] = terms;
  }
  if (input.classes) {
    json classes = json::array();
    for (const auto& entry : input.classes->entries) {
      json c;
      c["label"] = entry.label;
      c["t_power"] = entry.t_power;
      json vt = json::array();
      for (const auto& [e, coeff] : entry.value.terms()) {
        json t;
        t["coeff"] = {coeff.real(), coeff.imag()};
        t["exponents"] = e;
        vt.push_back(t);
      }
      c["value_terms"] = vt;
      classes.push_back(c);
    }
    j["classes"] = classes;
    json pairs = json::array();
    for (const auto& dp : input.classes->dual_pairs) {
      if (dp.sign == 1)
        pairs.push_back({dp.label, dp.dual_label});
      else
        pairs.push_back({dp.label, dp.dual_label, dp.sign});
    }
    j["dual_pairs"] = pairs;
  }
  return j.dump(2);
}

}  // namespace lgcrit
