#pragma once

// Data-parallel kernels. Each hot loop has a plain serial reference
// (`*_serial`) that follows the defining formula literally and an OpenMP
// version (`*_parallel`) that is used by the library. The test suite checks
// one against the other; bench/ times them.

#include <cstdint>
#include <vector>

#include "sidonlab/polyform.hpp"

namespace sidonlab::kernels {

/// Vertex of {-1,1}^n encoded as a bit mask: bit v-1 set means x_v = -1.
struct CubeArgmax {
  double value = 0.0;
  std::uint64_t mask = 0;
};

Point cube_vertex(int n, std::uint64_t mask);

/// max |P(x)| over all 2^n vertices, ties broken toward the smaller mask.
/// The serial version evaluates every vertex directly.
CubeArgmax cube_argmax_serial(const Polynomial& p);
/// Gray-code walk (one sign flip per step) split into chunks across threads.
CubeArgmax cube_argmax_parallel(const Polynomial& p);

struct AscentRun {
  double value = 0.0;  // |P| at the final phases
  std::vector<double> phases;
  int iterations = 0;
  bool converged = false;
};

/// |P(e^{i theta})|^2 and its phase gradient.
double phase_objective(const Polynomial& p, const std::vector<double>& theta,
                       std::vector<double>* gradient);

/// Gradient ascent on |P|^2 over phases; Armijo backtracking, halving from step 0.5.
AscentRun phase_ascent(const Polynomial& p, std::vector<double> theta, int max_iters, double tol);

std::vector<AscentRun> multistart_serial(const Polynomial& p,
                                         const std::vector<std::vector<double>>& starts,
                                         int max_iters, double tol);
std::vector<AscentRun> multistart_parallel(const Polynomial& p,
                                           const std::vector<std::vector<double>>& starts,
                                           int max_iters, double tol);

/// Per-subset mixed-norm factors of Blei's inequality, one per S with
/// |S| = d-k in lexicographic order:
///   ( sum_{j on S^c} ( sum_{i on S} |a(i+j)|^2 )^{k/(k+1)} )^{(k+1)/(2k)}.
/// `family` is non_decreasing (torus form, a(i+j) = a_{i+j} when the glued
/// map is non-decreasing) or strictly_increasing (cube, flat extension).
/// The serial version enumerates i and j literally.
std::vector<double> blei_terms_serial(const CoefficientTable& table, int k,
                                      std::uint64_t cap = kDefaultEnumerationCap);
/// Aggregates |a_m|^2 by the restriction of each support index m to the
/// outer block; subsets are processed in parallel.
std::vector<double> blei_terms_parallel(const CoefficientTable& table, int k);

}  // namespace sidonlab::kernels
