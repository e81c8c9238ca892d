#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "sidonlab/kernels.hpp"

namespace sidonlab::kernels {

namespace {

constexpr int kGrayChunkBits = 12;

}  // namespace

CubeArgmax cube_argmax_parallel(const Polynomial& p) {
  const int n = p.n();
  const auto& terms = p.terms();
  std::vector<std::vector<std::size_t>> touching(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < terms.size(); ++t)
    for (int v : terms[t].index) touching[static_cast<std::size_t>(v - 1)].push_back(t);

  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t chunk = std::min<std::uint64_t>(total, std::uint64_t{1} << kGrayChunkBits);
  const auto chunks = static_cast<long long>(total / chunk);
  std::vector<CubeArgmax> best(static_cast<std::size_t>(chunks), CubeArgmax{-1.0, 0});

#pragma omp parallel for schedule(static)
  for (long long c = 0; c < chunks; ++c) {
    const std::uint64_t start = static_cast<std::uint64_t>(c) * chunk;
    std::uint64_t mask = start ^ (start >> 1);
    std::vector<Complex> mono(terms.size());
    Complex value{};
    for (std::size_t t = 0; t < terms.size(); ++t) {
      Complex m = terms[t].coeff;
      for (int v : terms[t].index)
        if ((mask >> (v - 1)) & 1U) m = -m;
      mono[t] = m;
      value += m;
    }
    CubeArgmax local{std::abs(value), mask};
    for (std::uint64_t g = start + 1; g < start + chunk; ++g) {
      const int flip = std::countr_zero(g);
      mask ^= std::uint64_t{1} << flip;
      for (std::size_t t : touching[static_cast<std::size_t>(flip)]) {
        value -= 2.0 * mono[t];
        mono[t] = -mono[t];
      }
      const double a = std::abs(value);
      if (a > local.value || (a == local.value && mask < local.mask)) local = {a, mask};
    }
    best[static_cast<std::size_t>(c)] = local;
  }

  CubeArgmax out{-1.0, 0};
  for (const auto& b : best)
    if (b.value > out.value || (b.value == out.value && b.mask < out.mask)) out = b;
  // Report the directly evaluated modulus at the winner.
  out.value = std::abs(evaluate_unchecked(p, cube_vertex(n, out.mask)));
  return out;
}

std::vector<AscentRun> multistart_parallel(const Polynomial& p,
                                           const std::vector<std::vector<double>>& starts,
                                           int max_iters, double tol) {
  std::vector<AscentRun> out(starts.size());
  const auto count = static_cast<long long>(starts.size());
#pragma omp parallel for schedule(dynamic)
  for (long long r = 0; r < count; ++r)
    out[static_cast<std::size_t>(r)] =
        phase_ascent(p, starts[static_cast<std::size_t>(r)], max_iters, tol);
  return out;
}

std::vector<double> blei_terms_parallel(const CoefficientTable& table, int k) {
  const int d = table.d();
  const auto family = table.monotonicity();
  if (!table.homogeneous()) throw std::invalid_argument("blei: homogeneous table required");
  if (family == Monotonicity::unrestricted)
    throw std::invalid_argument("blei: table must be non-decreasing or strictly increasing");
  if (k < 1 || k > d) throw std::invalid_argument("blei: need 1 <= k <= d");

  const auto subsets = subsets_of_size(d, d - k);
  const auto k_positions = subsets_of_size(d, k);
  const double inner_exp = static_cast<double>(k) / (k + 1);
  const double outer_exp = static_cast<double>(k + 1) / (2.0 * k);
  std::vector<double> terms(subsets.size());
  const auto count = static_cast<long long>(subsets.size());

#pragma omp parallel for schedule(dynamic)
  for (long long s = 0; s < count; ++s) {
    const auto outer_slots = complement(d, subsets[static_cast<std::size_t>(s)]);
    std::map<std::vector<int>, double> inner;
    std::vector<int> j(static_cast<std::size_t>(k));
    for (const auto& [m, a] : table.entries()) {
      const double w = std::norm(a);
      if (w == 0.0) continue;
      if (family == Monotonicity::non_decreasing) {
        // The glued map equals m itself; j is m on the outer slots.
        for (int q = 0; q < k; ++q)
          j[static_cast<std::size_t>(q)] = m[static_cast<std::size_t>(outer_slots[static_cast<std::size_t>(q)] - 1)];
        inner[j] += w;
      } else {
        // Any k of the d distinct values of m can form the outer block.
        for (const auto& pos : k_positions) {
          for (int q = 0; q < k; ++q)
            j[static_cast<std::size_t>(q)] = m[static_cast<std::size_t>(pos[static_cast<std::size_t>(q)] - 1)];
          inner[j] += w;
        }
      }
    }
    double outer = 0.0;
    for (const auto& [key, v] : inner) outer += std::pow(v, inner_exp);
    terms[static_cast<std::size_t>(s)] = std::pow(outer, outer_exp);
  }
  return terms;
}

}  // namespace sidonlab::kernels
