#include "lgcrit/catalog.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace lgcrit {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

TorusPoint diag_point(int n, Complex z) {
  TorusPoint p(n);
  for (int i = 0; i < n; ++i) p[i] = z;
  return p;
}

TorusPoint point2(Complex a, Complex b) {
  TorusPoint p(2);
  p[0] = a;
  p[1] = b;
  return p;
}

PolyC mono(int dim, Complex c, const Exponents& e) { return PolyC::monomial(dim, c, e); }

CatalogEntry make_cpn(int n) {
  CatalogEntry e;
  e.name = "cp" + std::to_string(n);
  e.description = "complex projective " + std::to_string(n) +
                  "-space, Clifford torus fibre; W1 = diagonal (n+1)-th roots of unity";
  FanData fan;
  fan.dim = n;
  for (int i = 0; i < n; ++i) {
    Exponents v(n, 0);
    v[i] = 1;
    fan.vectors.push_back(v);
    fan.labels.push_back("F" + std::to_string(i + 1));
  }
  fan.vectors.push_back(Exponents(n, -1));
  fan.labels.push_back("F" + std::to_string(n + 1));
  e.fan = fan;
  e.expected_count = n + 1;
  for (int k = 0; k <= n; ++k) {
    const double th = 2.0 * kPi * k / (n + 1);
    e.expected_points.push_back(diag_point(n, Complex(std::cos(th), std::sin(th))));
  }
  const int sign = (n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
  e.expected_delta = [n, sign](const TorusPoint& z) {
    Complex zn(1);
    for (int i = 0; i < n; ++i) zn *= z[0];
    return Complex(sign * (n + 1)) * zn;
  };
  e.delta_note = std::string(sign < 0 ? "-" : "") + std::to_string(n + 1) + "*z^" +
                 std::to_string(n) + " on the diagonal";

  // I([CP^l]) = z^{n-l} t^{n-l}; diagonal representative z1^{n-l}
  ClassDictionary dict;
  for (int l = 0; l <= n; ++l) {
    Exponents exp(n, 0);
    exp[0] = n - l;
    std::string label = l == 0 ? "pt" : (l == n ? "M" : "CP" + std::to_string(l));
    dict.entries.push_back({label, mono(n, Complex(1), exp), n - l});
  }
  for (int l = 0; l <= n; ++l) {
    auto label = [&](int k) {
      return k == 0 ? std::string("pt") : (k == n ? std::string("M") : "CP" + std::to_string(k));
    };
    dict.dual_pairs.push_back({label(l), label(n - l), 1});
  }
  e.classes = dict;
  return e;
}

CatalogEntry make_s2xs2() {
  CatalogEntry e;
  e.name = "s2xs2";
  e.description = "S^2 x S^2 with the balanced form, product-of-equators torus; "
                  "W1 = {(+-1, +-1)}, Delta = -4 z1 z2";
  FanData fan;
  fan.dim = 2;
  fan.vectors = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  fan.labels = {"F1", "F2", "F3", "F4"};
  e.fan = fan;
  e.expected_count = 4;
  for (double a : {1.0, -1.0})
    for (double b : {1.0, -1.0}) e.expected_points.push_back(point2(a, b));
  e.expected_delta = [](const TorusPoint& z) { return Complex(-4) * z[0] * z[1]; };
  e.delta_note = "-4*z1*z2";

  ClassDictionary dict;
  dict.entries.push_back({"pt", mono(2, Complex(1), {1, 1}), 2});
  dict.entries.push_back({"A", mono(2, Complex(1), {0, 1}), 1});
  dict.entries.push_back({"B", mono(2, Complex(1), {1, 0}), 1});
  dict.entries.push_back({"M", PolyC::constant(2, Complex(1)), 0});
  dict.dual_pairs = {{"pt", "M", 1}, {"A", "B", 1}, {"B", "A", 1}, {"M", "pt", 1}};
  e.classes = dict;
  return e;
}

CatalogEntry make_bl1() {
  CatalogEntry e;
  e.name = "bl1";
  e.description = "blow-up of CP^2 at one point; W1 = diagonal roots of z^4+z^3-1, "
                  "Delta = -z^2(4z+3)";
  FanData fan;
  fan.dim = 2;
  // ordering recovered from the W2 parametrization (xi1, xi2, xi1+xi2, xi2)
  fan.vectors = {{1, 1}, {1, 0}, {-1, -1}, {0, 1}};
  fan.labels = {"F1", "F2", "F3", "F4"};
  e.fan = fan;
  e.expected_count = 4;
  for (const Complex z : univariate_roots({-1.0, 0.0, 0.0, 1.0}))  // z^4 + z^3 - 1
    e.expected_points.push_back(point2(z, z));
  e.expected_delta = [](const TorusPoint& z) {
    return -z[0] * z[0] * (Complex(4) * z[0] + Complex(3));
  };
  e.delta_note = "-z^2*(4z+3) on the diagonal";

  ClassDictionary dict;
  PolyC pt_val(2);
  pt_val.add_term({-2, -2}, Complex(1));
  pt_val.add_term({0, 0}, Complex(-1));  // 1/z^4 - 1 on the diagonal
  dict.entries.push_back({"pt", pt_val, 2});
  dict.entries.push_back({"L", mono(2, Complex(1), {-1, -1}), 1});
  dict.entries.push_back({"E", mono(2, Complex(1), {1, 1}), 1});
  dict.entries.push_back({"M", PolyC::constant(2, Complex(1)), 0});
  dict.dual_pairs = {{"pt", "M", 1}, {"L", "L", 1}, {"E", "E", -1}, {"M", "pt", 1}};
  e.classes = dict;
  return e;
}

CatalogEntry make_bl2() {
  CatalogEntry e;
  e.name = "bl2";
  e.description = "blow-up of CP^2 at two points; W1 = {(-1, (-1 +- sqrt5)/2)} and "
                  "{(z^-2, z) : z^3 - z - 1 = 0}";
  FanData fan;
  fan.dim = 2;
  // ordering recovered from the W2 parametrization
  // (xi1, xi2, xi3, xi1 - xi3, -xi1 + xi2 + xi3)
  fan.vectors = {{0, 1}, {-1, -1}, {0, -1}, {1, 0}, {1, 1}};
  fan.labels = {"F1", "F2", "F3", "F4", "F5"};
  e.fan = fan;
  e.expected_count = 5;
  const double s5 = std::sqrt(5.0);
  e.expected_points.push_back(point2(-1.0, (-1.0 + s5) / 2.0));
  e.expected_points.push_back(point2(-1.0, (-1.0 - s5) / 2.0));
  for (const Complex z : univariate_roots({-1.0, -1.0, 0.0}))  // z^3 - z - 1
    e.expected_points.push_back(point2(Complex(1) / (z * z), z));
  e.expected_delta = [](const TorusPoint& z) {
    const Complex d = z[1] - Complex(1) / z[1];
    return d * d - Complex(4) / z[0];
  };
  e.delta_note = "(z2 - 1/z2)^2 - 4/z1";

  ClassDictionary dict;
  PolyC pt_val(2);
  pt_val.add_term({0, 0}, Complex(1));
  pt_val.add_term({0, 1}, Complex(1));
  pt_val.add_term({0, -2}, Complex(-1));  // 1 + z2 - 1/z2^2
  dict.entries.push_back({"pt", pt_val, 2});
  PolyC l_val(2);
  l_val.add_term({1, 1}, Complex(1));
  l_val.add_term({0, 1}, Complex(1));  // z1 z2 + z2
  dict.entries.push_back({"L", l_val, 1});
  dict.entries.push_back({"E1", mono(2, Complex(1), {1, 1}), 1});
  dict.entries.push_back({"E2", mono(2, Complex(1), {0, -1}), 1});
  dict.entries.push_back({"M", PolyC::constant(2, Complex(1)), 0});
  dict.dual_pairs = {
      {"pt", "M", 1}, {"L", "L", 1}, {"E1", "E1", -1}, {"E2", "E2", -1}, {"M", "pt", 1}};
  e.classes = dict;
  return e;
}

CatalogEntry make_bl3() {
  CatalogEntry e;
  e.name = "bl3";
  e.description = "blow-up of CP^2 at three points; W1 = {(+-1,+-1)} and the two "
                  "nontrivial diagonal cube roots of unity";
  FanData fan;
  fan.dim = 2;
  // ordering recovered from the W2 parametrization
  // (xi1, xi2, xi3, xi4, xi1 + xi2 - xi4, -xi1 + xi3 + xi4)
  fan.vectors = {{0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, 0}, {1, 1}};
  fan.labels = {"F1", "F2", "F3", "F4", "F5", "F6"};
  e.fan = fan;
  e.expected_count = 6;
  for (double a : {1.0, -1.0})
    for (double b : {1.0, -1.0}) e.expected_points.push_back(point2(a, b));
  const Complex omega(std::cos(2.0 * kPi / 3.0), std::sin(2.0 * kPi / 3.0));
  e.expected_points.push_back(point2(omega, omega));
  e.expected_points.push_back(point2(std::conj(omega), std::conj(omega)));
  e.expected_delta = [](const TorusPoint& z) {
    const Complex d = z[1] - Complex(1) / z[1];
    return d * d - (Complex(4) / z[0]) * (Complex(1) + z[1] + z[0] * z[1]);
  };
  e.delta_note = "(z2 - 1/z2)^2 - (4/z1)(1 + z2 + z1 z2) on W1";

  ClassDictionary dict;
  PolyC pt_val(2);  // (1+z1)(1+z2) - z1^2 z2^2
  pt_val.add_term({0, 0}, Complex(1));
  pt_val.add_term({1, 0}, Complex(1));
  pt_val.add_term({0, 1}, Complex(1));
  pt_val.add_term({1, 1}, Complex(1));
  pt_val.add_term({2, 2}, Complex(-1));
  dict.entries.push_back({"pt", pt_val, 2});
  PolyC l_val(2);  // z2 + z1 z2 + 1/z1
  l_val.add_term({0, 1}, Complex(1));
  l_val.add_term({1, 1}, Complex(1));
  l_val.add_term({-1, 0}, Complex(1));
  dict.entries.push_back({"L", l_val, 1});
  dict.entries.push_back({"E1", mono(2, Complex(1), {1, 1}), 1});
  dict.entries.push_back({"E2", mono(2, Complex(1), {-1, 0}), 1});
  dict.entries.push_back({"E3", mono(2, Complex(1), {0, -1}), 1});
  dict.entries.push_back({"M", PolyC::constant(2, Complex(1)), 0});
  dict.dual_pairs = {{"pt", "M", 1}, {"L", "L", 1},   {"E1", "E1", -1},
                     {"E2", "E2", -1}, {"E3", "E3", -1}, {"M", "pt", 1}};
  e.classes = dict;
  return e;
}

CatalogEntry make_chekanov() {
  CatalogEntry e;
  e.name = "chekanov";
  e.description = "Chekanov torus in CP^2 (non-toric); W1 = {(1, 2w) : w^3 = 1}, "
                  "Delta = -6/z_b";
  e.terms = {{Complex(2), {0, -2}},
             {Complex(1), {1, -2}},
             {Complex(1), {-1, -2}},
             {Complex(1), {0, 1}}};
  e.axis_labels = {"z_a", "z_b"};
  e.expected_count = 3;
  for (int k = 0; k < 3; ++k) {
    const double th = 2.0 * kPi * k / 3.0;
    e.expected_points.push_back(point2(1.0, Complex(2.0 * std::cos(th), 2.0 * std::sin(th))));
  }
  e.expected_delta = [](const TorusPoint& z) { return Complex(-6) / z[1]; };
  e.delta_note = "-6/z_b";
  e.note = "quadratic form expands to z_b^-2 X1^2 + 12 z_b^-2 X2^2 in the basis {a, b}; "
           "the coefficient 12 sits on the b-axis, at odds with the commonly printed "
           "X1/X2 labeling (the discriminant is unaffected)";
  return e;
}

}  // namespace

std::vector<Complex> univariate_roots(const std::vector<double>& ascending_coeffs) {
  const int d = static_cast<int>(ascending_coeffs.size());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -ascending_coeffs[i];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  std::vector<Complex> roots(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + d);
  return roots;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back(make_cpn(2));
    v.push_back(make_cpn(3));
    v.push_back(make_cpn(4));
    v.push_back(make_s2xs2());
    v.push_back(make_bl1());
    v.push_back(make_bl2());
    v.push_back(make_bl3());
    v.push_back(make_chekanov());
    return v;
  }();
  return entries;
}

const CatalogEntry* find_catalog(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace lgcrit
