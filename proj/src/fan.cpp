#include "lgcrit/fan.hpp"

#include <algorithm>
#include <optional>
#include <numeric>
#include <stdexcept>

namespace lgcrit {

namespace {

int gcd_of_entries(const Exponents& v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, std::abs(x));
  return g;
}

// Rank of an integer matrix (rows x cols) over Q, by rational elimination.
int rational_rank(std::vector<std::vector<Rational>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (int cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> normals_as_rows(const FanData& fan) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(fan.vectors.size());
  for (const auto& v : fan.vectors) {
    std::vector<Rational> row(fan.dim);
    for (int i = 0; i < fan.dim; ++i) row[i] = Rational(v[i]);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Solve the square rational system a x = b; returns nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const int n = static_cast<int>(a.size());
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!a[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational f = a[r][c] / a[c][c];
      for (int cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Kernel direction of an (n-1) x n rational matrix of rank n-1, or nullopt.
std::optional<std::vector<Rational>> kernel_direction(std::vector<std::vector<Rational>> m,
                                                      int n) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < n && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (int cc = 0; cc < n; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank != n - 1) return std::nullopt;
  // one free column: the first not in pivot_col
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
      free_col = c;
      break;
    }
  std::vector<Rational> d(n, Rational(0));
  d[free_col] = Rational(1);
  for (int r = 0; r < rank; ++r)
    d[pivot_col[r]] = -m[r][free_col] / m[r][pivot_col[r]];
  return d;
}

// The recession cone { d : <v_i, d> >= 0 for all i } is trivial iff the
// polytope is bounded. With rank-n normals the cone is pointed, so a
// nontrivial cone has an extreme ray cut out by n-1 active constraints.
bool polytope_bounded(const FanData& fan) {
  const int n = fan.dim;
  const int r = fan.facet_count();
  auto dot_sign = [&](const std::vector<Rational>& d) {
    // +1 if Vd >= 0 with some strict, -1 if Vd <= 0 with some strict, 0 mixed
    bool nonneg = true, nonpos = true;
    for (const auto& v : fan.vectors) {
      Rational s(0);
      for (int i = 0; i < n; ++i) s += Rational(v[i]) * d[i];
      if (s < Rational(0)) nonneg = false;
      if (s > Rational(0)) nonpos = false;
    }
    if (nonneg) return 1;
    if (nonpos) return -1;
    return 0;
  };
  if (n == 1) {
    bool pos = false, neg = false;
    for (const auto& v : fan.vectors) (v[0] > 0 ? pos : neg) = true;
    return pos && neg;
  }
  // enumerate (n-1)-subsets of rows
  std::vector<int> comb(n - 1);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    std::vector<std::vector<Rational>> sub;
    for (int k : comb) {
      std::vector<Rational> row(n);
      for (int i = 0; i < n; ++i) row[i] = Rational(fan.vectors[k][i]);
      sub.push_back(std::move(row));
    }
    if (auto d = kernel_direction(std::move(sub), n)) {
      if (dot_sign(*d) != 0) return false;  // unbounded direction found
    }
    // next combination
    int i = n - 2;
    while (i >= 0 && comb[i] == r - (n - 1) + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < n - 1; ++j) comb[j] = comb[j - 1] + 1;
  }
  return true;
}

}  // namespace

ValidationReport validate_fan(const FanData& fan) {
  ValidationReport rep;
  const int n = fan.dim;
  const int r = fan.facet_count();
  if (n < 1) {
    rep.valid = false;
    rep.errors.push_back("dimension must be >= 1");
    return rep;
  }
  for (int k = 0; k < r; ++k) {
    if (static_cast<int>(fan.vectors[k].size()) != n) {
      rep.valid = false;
      rep.errors.push_back("vector " + std::to_string(k) + " has wrong length");
      return rep;
    }
    const int g = gcd_of_entries(fan.vectors[k]);
    if (g != 1) {
      rep.valid = false;
      rep.errors.push_back("non-primitive vector at index " + std::to_string(k) +
                           " (gcd = " + std::to_string(g) + ")");
    }
  }
  if (!rep.valid) return rep;
  if (rational_rank(normals_as_rows(fan)) != n) {
    rep.valid = false;
    rep.errors.push_back("vectors do not span R^" + std::to_string(n));
    return rep;
  }
  if (!polytope_bounded(fan)) {
    rep.valid = false;
    rep.errors.push_back("polytope { <v_i,x> >= -1 } is unbounded");
    return rep;
  }
  rep.info.push_back("r = n + b2 consistency: r - n = " + std::to_string(r - n) +
                     " (inferred b2)");
  return rep;
}

SuperpotentialSpec build_superpotential(const FanData& fan) {
  SuperpotentialSpec spec;
  spec.dim = fan.dim;
  spec.toric = true;
  PolyC pot(fan.dim);
  for (const auto& v : fan.vectors) {
    spec.terms.push_back({Complex(1), v});
    pot.add_term(v, Complex(1));
  }
  spec.potential = pot;
  return spec;
}

SuperpotentialSpec general_superpotential(int dim, const std::vector<WeightedTerm>& terms) {
  SuperpotentialSpec spec;
  spec.dim = dim;
  spec.toric = false;
  PolyC pot(dim);
  for (const auto& t : terms) {
    if (t.coeff == Complex(0)) throw std::invalid_argument("superpotential: zero weight");
    if (static_cast<int>(t.exponents.size()) != dim)
      throw std::invalid_argument("superpotential: exponent length != dim");
    spec.terms.push_back(t);
    pot.add_term(t.exponents, t.coeff);
  }
  spec.potential = pot;
  return spec;
}

WideVariety2 wide_variety_2(const FanData& fan) {
  const int n = fan.dim;
  const int r = fan.facet_count();
  // system rows: sum_k v_k^j xi_k = 0, one row per coordinate j
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(r));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < r; ++k) m[j][k] = Rational(fan.vectors[k][j]);

  // Gaussian elimination choosing pivot columns right-to-left, so the
  // highest-indexed facet coordinates become dependent and the leading ones
  // stay free. This reproduces the parametrizations used in the literature.
  std::vector<int> pivot_col;
  std::vector<int> pivot_row;
  int rank = 0;
  std::vector<bool> row_used(n, false);
  for (int c = r - 1; c >= 0 && rank < n; --c) {
    int pr = -1;
    for (int j = 0; j < n; ++j)
      if (!row_used[j] && !m[j][c].is_zero()) {
        pr = j;
        break;
      }
    if (pr < 0) continue;
    row_used[pr] = true;
    for (int j = 0; j < n; ++j) {
      if (j == pr || m[j][c].is_zero()) continue;
      const Rational f = m[j][c] / m[pr][c];
      for (int cc = 0; cc < r; ++cc) m[j][cc] -= f * m[pr][cc];
    }
    pivot_col.push_back(c);
    pivot_row.push_back(pr);
    ++rank;
  }
  if (rank != n)
    throw std::invalid_argument("wide_variety_2: vectors do not span (nullspace dim != r-n)");

  std::vector<bool> is_pivot(r, false);
  for (int c : pivot_col) is_pivot[c] = true;
  WideVariety2 w;
  for (int c = 0; c < r; ++c)
    if (!is_pivot[c]) w.free_indices.push_back(c);

  const int f = static_cast<int>(w.free_indices.size());  // = r - n
  // basis vector b_t: free coordinate t set to 1, pivots solved
  for (int t = 0; t < f; ++t) {
    std::vector<Rational> vec(r, Rational(0));
    vec[w.free_indices[t]] = Rational(1);
    for (int pi = 0; pi < rank; ++pi) {
      const int c = pivot_col[pi];
      const int row = pivot_row[pi];
      // row reads: m[row][c] * xi_c + sum_{free} m[row][fc] * xi_fc = 0
      vec[c] = -m[row][w.free_indices[t]] / m[row][c];
    }
    w.basis.push_back(std::move(vec));
  }
  // coordinate form of xi_k over the free parameters
  for (int k = 0; k < r; ++k) {
    std::vector<Rational> form(f, Rational(0));
    for (int t = 0; t < f; ++t) form[t] = w.basis[t][k];
    w.coordinate_forms.push_back(std::move(form));
  }
  for (const auto& v : fan.vectors)
    w.boundary_monomials.push_back(PolyC::monomial(n, Complex(1), v));
  return w;
}

PolytopeFacts polytope_vertices(const FanData& fan) {
  const int n = fan.dim;
  const int r = fan.facet_count();
  PolytopeFacts facts;

  std::vector<int> comb(n);
  std::iota(comb.begin(), comb.end(), 0);
  if (r < n) return facts;
  while (true) {
    std::vector<std::vector<Rational>> a;
    for (int k : comb) {
      std::vector<Rational> row(n);
      for (int i = 0; i < n; ++i) row[i] = Rational(fan.vectors[k][i]);
      a.push_back(std::move(row));
    }
    std::vector<Rational> b(n, Rational(-1));
    if (auto x = solve_square(std::move(a), std::move(b))) {
      bool feasible = true;
      for (const auto& v : fan.vectors) {
        Rational s(0);
        for (int i = 0; i < n; ++i) s += Rational(v[i]) * (*x)[i];
        if (s < Rational(-1)) {
          feasible = false;
          break;
        }
      }
      if (feasible &&
          std::find(facts.vertices.begin(), facts.vertices.end(), *x) == facts.vertices.end())
        facts.vertices.push_back(*x);
    }
    int i = n - 1;
    while (i >= 0 && comb[i] == r - n + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
  }

  for (const auto& x : facts.vertices) {
    std::set<int> active;
    for (int k = 0; k < r; ++k) {
      Rational s(0);
      for (int i = 0; i < n; ++i) s += Rational(fan.vectors[k][i]) * x[i];
      if (s == Rational(-1)) active.insert(k);
    }
    facts.incidence.push_back(std::move(active));
  }
  return facts;
}

bool facet_intersection_nonempty(const PolytopeFacts& facts, const std::set<int>& I, int dim) {
  if (static_cast<int>(I.size()) > dim)
    throw std::invalid_argument("facet_intersection_nonempty: |I| > n");
  if (I.empty()) return true;
  for (const auto& inc : facts.incidence)
    if (std::includes(inc.begin(), inc.end(), I.begin(), I.end())) return true;
  return false;
}

int expected_critical_count(const PolytopeFacts& facts) {
  return static_cast<int>(facts.vertices.size());
}

std::string linear_form_string(const std::vector<Rational>& coeffs,
                               const std::vector<int>& free_indices) {
  std::string out;
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    const Rational& c = coeffs[t];
    if (c.is_zero()) continue;
    const std::string var = "xi" + std::to_string(free_indices[t] + 1);
    if (out.empty()) {
      if (c == Rational(1))
        out = var;
      else if (c == Rational(-1))
        out = "-" + var;
      else
        out = c.str() + "*" + var;
    } else {
      const Rational a = abs(c);
      out += (c < Rational(0)) ? " - " : " + ";
      out += (a == Rational(1)) ? var : a.str() + "*" + var;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace lgcrit
