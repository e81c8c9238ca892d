#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sidonlab/polyform.hpp"

namespace sidonlab {

inline constexpr int kExhaustiveCubeCap = 24;

enum class SupMethod { exhaustive, grid, ascent };

std::string to_string(SupMethod m);

/// A certified lower bound on sup |P|: `value` is |P(witness)|.
struct SupNormEstimate {
  double value = 0.0;
  Point witness;
  SupMethod method = SupMethod::ascent;
  int restarts_used = 0;
  long iterations = 0;
  bool certified_exact = false;  // exhaustive cube search only
};

struct AscentOptions {
  int restarts = 16;
  int max_iters = 500;
  double tol = 1e-10;
  std::uint64_t seed = 0;  // restart r draws its phases from seed + r
  /// Extra deterministic starting phases, run before the random restarts.
  std::vector<std::vector<double>> seeded_phases;
};

/// (sum |a|^p)^{1/p}
double coeff_lp_norm(const Polynomial& p, double exponent);

/// L^2(T^n) norm from monomial orthonormality.
double l2_norm_exact(const Polynomial& p);

/// Maximum of |P| over all 2^n cube vertices.
SupNormEstimate supnorm_cube_exact(const Polynomial& p, int max_n = kExhaustiveCubeCap);

/// Multi-start phase ascent on |P|^2. Lower bound only.
SupNormEstimate supnorm_torus_estimate(const Polynomial& p, const AscentOptions& options = {});

/// Uniform phase grid with m points per angle, n <= 3.
SupNormEstimate supnorm_torus_grid(const Polynomial& p, int m);

/// Uniform phases in [0, 2pi) drawn from mt19937_64; identical on
/// every platform for a given seed.
std::vector<double> random_phases(int n, std::uint64_t seed);

/// coeff_lp_norm(P, 2d/(d+1)) / est.value
double bh_ratio(const Polynomial& p, const SupNormEstimate& est);

}  // namespace sidonlab
