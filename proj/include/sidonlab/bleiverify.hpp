#pragma once

// Both sides of Blei's inequality for coefficient tables on the torus
// (non-decreasing support) and on the cube (strictly increasing support),
// and the quantities A and B of the complex argument with their envelopes.

#include <string>
#include <utility>
#include <vector>

#include "sidonlab/boundcalc.hpp"
#include "sidonlab/polyform.hpp"

namespace sidonlab {

enum class BleiVariant { complex_form, boolean, boolean_strengthened };

std::string to_string(BleiVariant v);
BleiVariant blei_variant_from_string(const std::string& s);

struct BleiSides {
  BleiVariant variant = BleiVariant::boolean;
  int k = 1;
  double lhs = 0.0;
  double rhs = 0.0;                 // includes C(d,k)^{-1/2} for the strengthened variant
  double rhs_unstrengthened = 0.0;  // geometric mean of the per-subset terms
  double strengthening_factor = 1.0;
  /// S (|S| = d-k, lexicographic) -> bracketed factor for that S.
  std::vector<std::pair<std::vector<int>, double>> per_subset_terms;

  /// lhs > rhs (1 + rel_tol)
  bool violated(double rel_tol = 1e-9) const { return lhs > rhs * (1.0 + rel_tol); }
};

BleiSides blei_sides(const CoefficientTable& coeffs, int k, BleiVariant variant);

struct ChainA {
  double A = 0.0;        // C(n+d-1,d)^{(d+1)/(2d)}
  double A_bound = 0.0;  // C(n+k-1,k)^{1/(2k)} C(n+d-1,d)^{1/2}
};

ChainA chain_A(int n, int d, int k);

struct ChainB {
  double lower = 0.0;
  double upper = 0.0;
};

/// Envelopes of B. `sup_norm` stands in for ||P||_inf in the upper envelope.
ChainB chain_B_bounds(int n, int d, int k, const BoundConfig& cfg, double sup_norm = 1.0);

/// B evaluated literally over M(S,n) x M(S^c,n), |S| = k.
double chain_B_exact(const Polynomial& p, int k, std::uint64_t cap = kDefaultEnumerationCap);

struct ChainQuantities {
  double A = 0.0;
  double A_bound = 0.0;
  double B_exact = 0.0;
  double B_lower = 0.0;
  double B_upper = 0.0;
};

/// All chain quantities for a unimodular torus polynomial on the full space.
ChainQuantities chain_quantities(const Polynomial& p, int k, const BoundConfig& cfg,
                                 double sup_norm, std::uint64_t cap = kDefaultEnumerationCap);

/// |[i+j]| <= d(d-1)...(d-k+1) |[j]| with k = |i|, d = |i| + |j|, decided on
/// integers. i and j must live on complementary slot sets.
bool ij_ratio_check(const MultiIndex& i, const MultiIndex& j);

/// Reports elem = C(n,d)^{1/2} C(n,k)^{1/(2k)}, denom = C(n-k,d-k)^{1/2}
/// C(n,k)^{(k+1)/(2k)}, their ratio, and the exact squared ratio 1/C(d,k).
std::vector<BoundReport> elem_denom_win(int n, int d, int k);

}  // namespace sidonlab
