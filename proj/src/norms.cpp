#include "sidonlab/norms.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "sidonlab/kernels.hpp"

namespace sidonlab {

std::string to_string(SupMethod m) {
  switch (m) {
    case SupMethod::exhaustive: return "exhaustive";
    case SupMethod::grid: return "grid";
    case SupMethod::ascent: return "ascent";
  }
  return "?";
}

double coeff_lp_norm(const Polynomial& p, double exponent) {
  if (!(exponent > 0.0)) throw std::invalid_argument("coeff_lp_norm: exponent must be positive");
  double sum = 0.0;
  for (const auto& t : p.terms()) sum += std::pow(std::abs(t.coeff), exponent);
  return std::pow(sum, 1.0 / exponent);
}

double l2_norm_exact(const Polynomial& p) {
  if (p.domain() != Domain::torus) throw std::invalid_argument("l2_norm_exact: torus polynomial");
  double sum = 0.0;
  for (const auto& t : p.terms()) sum += std::norm(t.coeff);
  return std::sqrt(sum);
}

SupNormEstimate supnorm_cube_exact(const Polynomial& p, int max_n) {
  if (p.domain() != Domain::cube) throw std::invalid_argument("supnorm_cube_exact: cube polynomial");
  if (p.n() > max_n)
    throw CapExceeded("supnorm_cube_exact: n = " + std::to_string(p.n()) + " exceeds cap " +
                          std::to_string(max_n),
                      BigInt(1) << p.n(), std::uint64_t{1} << max_n);
  const auto best = kernels::cube_argmax_parallel(p);
  SupNormEstimate out;
  out.witness = kernels::cube_vertex(p.n(), best.mask);
  out.value = std::abs(evaluate(p, out.witness));
  out.method = SupMethod::exhaustive;
  out.certified_exact = true;
  return out;
}

std::vector<double> random_phases(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> theta(static_cast<std::size_t>(n));
  for (auto& t : theta)
    t = 2.0 * std::numbers::pi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return theta;
}

SupNormEstimate supnorm_torus_estimate(const Polynomial& p, const AscentOptions& options) {
  if (p.domain() != Domain::torus) throw std::invalid_argument("supnorm_torus_estimate: torus polynomial");
  if (options.restarts < 1) throw std::invalid_argument("supnorm_torus_estimate: restarts >= 1");
  std::vector<std::vector<double>> starts = options.seeded_phases;
  for (const auto& s : starts)
    if (static_cast<int>(s.size()) != p.n())
      throw std::invalid_argument("supnorm_torus_estimate: seeded phases have wrong dimension");
  for (int r = 0; r < options.restarts; ++r)
    starts.push_back(random_phases(p.n(), options.seed + static_cast<std::uint64_t>(r)));

  const auto runs = kernels::multistart_parallel(p, starts, options.max_iters, options.tol);
  std::size_t best = 0;
  SupNormEstimate out;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    out.iterations += runs[r].iterations;
    if (runs[r].value > runs[best].value) best = r;
  }
  out.witness = point_from_phases(runs[best].phases);
  out.value = std::abs(evaluate(p, out.witness));
  out.method = SupMethod::ascent;
  out.restarts_used = static_cast<int>(runs.size());
  return out;
}

SupNormEstimate supnorm_torus_grid(const Polynomial& p, int m) {
  if (p.domain() != Domain::torus) throw std::invalid_argument("supnorm_torus_grid: torus polynomial");
  if (p.n() > 3) throw std::invalid_argument("supnorm_torus_grid: only for n <= 3");
  if (m < 1) throw std::invalid_argument("supnorm_torus_grid: m >= 1");
  const int n = p.n();
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  std::vector<double> theta(static_cast<std::size_t>(n));
  SupNormEstimate out;
  out.method = SupMethod::grid;
  out.value = -1.0;
  long total = 1;
  for (int v = 0; v < n; ++v) total *= m;
  for (long g = 0; g < total; ++g) {
    long rest = g;
    for (int v = 0; v < n; ++v) {
      theta[static_cast<std::size_t>(v)] = 2.0 * std::numbers::pi * static_cast<double>(rest % m) / m;
      rest /= m;
    }
    const Point z = point_from_phases(theta);
    const double a = std::abs(evaluate(p, z));
    if (a > out.value) {
      out.value = a;
      out.witness = z;
    }
  }
  out.iterations = total;
  return out;
}

double bh_ratio(const Polynomial& p, const SupNormEstimate& est) {
  if (p.d() < 1) throw std::invalid_argument("bh_ratio: degree must be >= 1");
  if (!(est.value > 0.0)) throw std::domain_error("bh_ratio: sup-norm estimate is zero");
  const double exponent = 2.0 * p.d() / (p.d() + 1.0);
  return coeff_lp_norm(p, exponent) / est.value;
}

}  // namespace sidonlab
