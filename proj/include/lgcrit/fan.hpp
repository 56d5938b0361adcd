#pragma once

#include <set>
#include <string>
#include <vector>

#include "lgcrit/laurent.hpp"
#include "lgcrit/rational.hpp"

namespace lgcrit {

/// Combinatorial data of a monotone toric manifold: the inward-pointing
/// primitive facet normals of the moment polytope, normalized to the
/// reflexive form { x : <v_i, x> >= -1 }.
struct FanData {
  int dim = 0;
  std::vector<Exponents> vectors;
  std::vector<std::string> labels;  // optional display labels, size 0 or r

  int facet_count() const { return static_cast<int>(vectors.size()); }
};

/// One weighted superpotential term: coefficient nu(B) and exponent dB.
struct WeightedTerm {
  Complex coeff;
  Exponents exponents;
};

/// A superpotential given as a weighted term list, collected into a Laurent
/// polynomial. Toric fans produce unit weights; general (non-toric) inputs
/// may carry arbitrary nonzero weights.
struct SuperpotentialSpec {
  int dim = 0;
  std::vector<WeightedTerm> terms;  // as supplied, before collection
  PolyC potential{1};
  bool toric = false;  // true when built from a fan (all weights 1)
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> errors;
  std::vector<std::string> info;
};

/// Vertices of { <v_i, x> >= -1 } with exact rational coordinates, and the
/// set of facets active at each vertex.
struct PolytopeFacts {
  std::vector<std::vector<Rational>> vertices;
  std::vector<std::set<int>> incidence;  // facet indices active at vertex k
};

/// The linear wide variety: nullspace of the n x r system sum_k v_k^j xi_k = 0,
/// parametrized by the free coordinates. coordinate_forms[k] expresses xi_k as
/// a rational linear form in the free parameters; every xi_k must be nonzero
/// on the variety. boundary_monomials describes d_W : z -> (z^{v_1},...,z^{v_r}).
struct WideVariety2 {
  std::vector<int> free_indices;                     // facet indices acting as parameters
  std::vector<std::vector<Rational>> basis;          // nullspace basis, one per free index
  std::vector<std::vector<Rational>> coordinate_forms;  // r forms, coeffs over free params
  std::vector<PolyC> boundary_monomials;             // z^{v_k}, k = 1..r
};

ValidationReport validate_fan(const FanData& fan);

/// Superpotential sum_i z^{v_i} with unit weights (Maslov-2 disk classes of
/// the monotone fibre, one per facet).
SuperpotentialSpec build_superpotential(const FanData& fan);

/// General weighted superpotential; duplicate exponents are collected.
/// Throws on a zero weight or inconsistent dimensions.
SuperpotentialSpec general_superpotential(int dim, const std::vector<WeightedTerm>& terms);

/// Throws std::invalid_argument if the vectors do not span (nullspace
/// dimension != r - n).
WideVariety2 wide_variety_2(const FanData& fan);

PolytopeFacts polytope_vertices(const FanData& fan);

/// True iff the facets indexed by I have a common point, tested via vertex
/// incidence (valid for simple polytopes). |I| > n is rejected.
bool facet_intersection_nonempty(const PolytopeFacts& facts, const std::set<int>& I, int dim);

/// Number of polytope vertices = dim QH = |W1| when the potential is Morse.
int expected_critical_count(const PolytopeFacts& facts);

/// Render a rational linear form in the free parameters, e.g. "xi1 + xi2".
std::string linear_form_string(const std::vector<Rational>& coeffs,
                               const std::vector<int>& free_indices);

}  // namespace lgcrit
