#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <json.hpp>
#include <random>

#include "lgcrit/catalog.hpp"
#include "lgcrit/clifford.hpp"
#include "lgcrit/report.hpp"
#include "lgcrit/torus2.hpp"

namespace {

using namespace lgcrit;
using nlohmann::json;

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

int run_catalog_list() {
  for (const auto& e : catalog()) {
    std::cout << e.name << "  (expected |W1| = " << e.expected_count << ")\n    "
              << e.description << "\n";
  }
  return 0;
}

int run_analyze(const std::string& example, const std::string& input_path,
                const std::string& format, const SolverConfig& cfg,
                std::optional<int> expected, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  AnalysisReport report;
  try {
    if (!example.empty()) {
      const CatalogEntry* entry = find_catalog(example);
      if (!entry) {
        std::cerr << "unknown example '" << example << "' (see: lgcrit catalog list)\n";
        return 1;
      }
      report = analyze_catalog(*entry, cfg, expected, tol);
    } else {
      report = analyze(load_fan_file(input_path), cfg, expected, tol);
    }
  } catch (const std::exception& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 1;
  }
  std::cout << (format == "json" ? render_json(report) : render_text(report));
  const auto t1 = std::chrono::steady_clock::now();
  std::cerr << "analysis took "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
            << " ms\n";
  return report.exit_code();
}

int run_triangle(long long np, long long nq, long long nr, long long npqr,
                 const std::string& shift) {
  TriangleCounts counts{np, nq, nr, npqr};
  const long long delta = triangle_discriminant(counts);
  const SigmaTau st = sigma_tau_from_counts(counts);

  json j;
  j["counts"] = {{"n_P", np}, {"n_Q", nq}, {"n_R", nr}, {"n_PQR", npqr}};
  j["discriminant"] = delta;
  j["sigma"] = st.sigma.str();
  j["tau"] = st.tau.str();
  j["sigma2_plus_4tau_matches"] = st.discriminant() == Rational(delta);

  if (!shift.empty()) {
    const Rational r = parse_rational(shift);
    const SigmaTau shifted = sigma_tau_shift(st, r);
    j["shift"] = {{"r", r.str()},
                  {"sigma", shifted.sigma.str()},
                  {"tau", shifted.tau.str()},
                  {"invariant_preserved", shifted.discriminant() == st.discriminant()}};
  }

  json checks = json::array();
  bool all_pass = true;
  for (const auto& ck : mod2_report(delta, counts, st.tau.num())) {
    json cj;
    cj["name"] = ck.name;
    cj["applicable"] = ck.applicable;
    cj["pass"] = ck.pass;
    cj["detail"] = ck.detail;
    checks.push_back(cj);
    if (ck.applicable && !ck.pass) all_pass = false;
  }
  j["mod2_checks"] = checks;
  std::cout << j.dump(2) << "\n";
  return all_pass ? 0 : 2;
}

// Random-Q verification of the Clifford construction over exact rationals:
// anticommutator recovery, associativity, grading, and the Q = 0 exterior case.
int run_clifford_check(int max_n, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto rand_rational = [&rng]() {
    const long long num = static_cast<long long>(rng() % 11) - 5;
    const long long den = 1 + static_cast<long long>(rng() % 4);
    return Rational(num, den);
  };

  int failures = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) q[i][j] = q[j][i] = rand_rational();
    CliffordAlgebra<Rational> alg(q);

    // anticommutator relations a_i a_j + a_j a_i = 2 q_ij t
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        auto ab = alg.product(alg.generator(i), alg.generator(j));
        auto ba = alg.product(alg.generator(j), alg.generator(i));
        CliffordElement<Rational> sum;
        sum.dim = n;
        for (const auto& [k, c] : ab.coeffs) sum.add(k.first, k.second, c);
        for (const auto& [k, c] : ba.coeffs) sum.add(k.first, k.second, c);
        CliffordElement<Rational> expected;
        expected.dim = n;
        expected.add({}, 1, Rational(2) * q[i - 1][j - 1]);
        if (!(sum == expected)) ++failures;
      }

    // associativity on random elements
    auto rand_element = [&]() {
      CliffordElement<Rational> e;
      e.dim = n;
      for (int t = 0; t < 3; ++t) {
        std::vector<int> subset;
        for (int i = 1; i <= n; ++i)
          if (rng() % 2) subset.push_back(i);
        e.add(subset, static_cast<int>(rng() % 2), rand_rational());
      }
      return e;
    };
    const auto x = rand_element(), y = rand_element(), z = rand_element();
    if (!(alg.product(alg.product(x, y), z) == alg.product(x, alg.product(y, z)))) ++failures;
  }

  // Q = 0 reproduces the exterior algebra
  {
    CliffordAlgebra<Rational> ext(
        std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
    const auto a12 = ext.product(ext.generator(1), ext.generator(2));
    const auto a21 = ext.product(ext.generator(2), ext.generator(1));
    CliffordElement<Rational> expect12;
    expect12.dim = 2;
    expect12.add({1, 2}, 0, Rational(1));
    CliffordElement<Rational> expect21;
    expect21.dim = 2;
    expect21.add({1, 2}, 0, Rational(-1));
    if (!(a12 == expect12) || !(a21 == expect21) ||
        !ext.product(ext.generator(1), ext.generator(1)).is_zero())
      ++failures;
  }

  std::cout << "clifford-check: " << trials << " random trials up to n = " << max_n << ", "
            << (failures == 0 ? "all exact checks passed" :
                                std::to_string(failures) + " FAILURES")
            << "\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-Ginzburg superpotential critical-point toolkit"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "built-in example catalog");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list catalog entries");

  auto* an = app.add_subcommand("analyze", "run the full analysis pipeline");
  std::string example, input_path, format = "text";
  SolverConfig cfg;
  int expected_flag = -1;
  double tol = 1e-9;
  an->add_option("--example", example, "catalog entry name");
  an->add_option("--input", input_path, "fan JSON file");
  an->add_option("--format", format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  an->add_option("--tol", tol, "check tolerance (default 1e-9)");
  an->add_option("--starts", cfg.starts, "number of Newton starts (0 = auto)");
  an->add_option("--seed", cfg.seed, "RNG seed (default 42)");
  an->add_option("--expected", expected_flag, "expected number of critical points");

  auto* tri = app.add_subcommand("triangle", "two-torus triangle-count algebra");
  long long np = 0, nq = 0, nr = 0, npqr = 0;
  std::string shift;
  tri->add_option("--np", np, "n_P")->required();
  tri->add_option("--nq", nq, "n_Q")->required();
  tri->add_option("--nr", nr, "n_R")->required();
  tri->add_option("--npqr", npqr, "n_PQR")->required();
  tri->add_option("--shift", shift, "basepoint shift r (integer or p/q)");

  auto* cliff = app.add_subcommand("clifford-check", "exact Clifford algebra verification");
  int cliff_n = 5, cliff_trials = 200;
  std::uint64_t cliff_seed = 42;
  cliff->add_option("--n", cliff_n, "max number of generators (default 5)");
  cliff->add_option("--trials", cliff_trials, "random trials (default 200)");
  cliff->add_option("--seed", cliff_seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  if (cat->parsed()) return run_catalog_list();
  if (an->parsed()) {
    if (example.empty() == input_path.empty()) {
      std::cerr << "analyze: need exactly one of --example or --input\n";
      return 1;
    }
    std::optional<int> expected;
    if (expected_flag >= 0) expected = expected_flag;
    return run_analyze(example, input_path, format, cfg, expected, tol);
  }
  if (tri->parsed()) return run_triangle(np, nq, nr, npqr, shift);
  if (cliff->parsed()) return run_clifford_check(cliff_n, cliff_trials, cliff_seed);
  return 0;
}
