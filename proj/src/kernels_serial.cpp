#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sidonlab/kernels.hpp"

namespace sidonlab::kernels {

Point cube_vertex(int n, std::uint64_t mask) {
  Point x(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] = (mask >> v) & 1U ? -1.0 : 1.0;
  return x;
}

CubeArgmax cube_argmax_serial(const Polynomial& p) {
  const std::uint64_t total = std::uint64_t{1} << p.n();
  CubeArgmax best{-1.0, 0};
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const double v = std::abs(evaluate_unchecked(p, cube_vertex(p.n(), mask)));
    if (v > best.value) best = {v, mask};
  }
  return best;
}

double phase_objective(const Polynomial& p, const std::vector<double>& theta,
                       std::vector<double>* gradient) {
  const auto n = static_cast<std::size_t>(p.n());
  Point z(n);
  for (std::size_t v = 0; v < n; ++v) z[v] = std::polar(1.0, theta[v]);
  Complex value{};
  Point w(gradient ? n : 0);
  for (const auto& term : p.terms()) {
    Complex m = term.coeff;
    for (int v : term.index) m *= z[static_cast<std::size_t>(v - 1)];
    value += m;
    // d/dtheta_v of the monomial is i * (multiplicity of v) * monomial.
    if (gradient)
      for (int v : term.index) w[static_cast<std::size_t>(v - 1)] += m;
  }
  if (gradient) {
    gradient->assign(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) (*gradient)[v] = -2.0 * (std::conj(value) * w[v]).imag();
  }
  return std::norm(value);
}

AscentRun phase_ascent(const Polynomial& p, std::vector<double> theta, int max_iters, double tol) {
  AscentRun run;
  std::vector<double> grad;
  std::vector<double> trial(theta.size());
  double f = phase_objective(p, theta, &grad);
  for (; run.iterations < max_iters; ++run.iterations) {
    double gnorm = 0.0;
    for (double g : grad) gnorm += g * g;
    if (std::sqrt(gnorm) < tol) {
      run.converged = true;
      break;
    }
    bool improved = false;
    for (double step = 0.5; step > 1e-18; step *= 0.5) {
      for (std::size_t v = 0; v < theta.size(); ++v) trial[v] = theta[v] + step * grad[v];
      const double ft = phase_objective(p, trial, nullptr);
      // Armijo: plain "ft > f" lets the iterate bounce across a ridge.
      if (ft >= f + 1e-4 * step * gnorm && ft > f) {
        improved = true;
        break;
      }
    }
    if (!improved) {
      // Stationary to working precision.
      run.converged = true;
      break;
    }
    theta.swap(trial);
    f = phase_objective(p, theta, &grad);
  }
  run.value = std::sqrt(f);
  run.phases = std::move(theta);
  return run;
}

std::vector<AscentRun> multistart_serial(const Polynomial& p,
                                         const std::vector<std::vector<double>>& starts,
                                         int max_iters, double tol) {
  std::vector<AscentRun> out;
  out.reserve(starts.size());
  for (const auto& s : starts) out.push_back(phase_ascent(p, s, max_iters, tol));
  return out;
}

std::vector<double> blei_terms_serial(const CoefficientTable& table, int k, std::uint64_t cap) {
  const int d = table.d();
  const int n = table.n();
  const auto family = table.monotonicity();
  if (!table.homogeneous()) throw std::invalid_argument("blei: homogeneous table required");
  if (family == Monotonicity::unrestricted)
    throw std::invalid_argument("blei: table must be non-decreasing or strictly increasing");
  if (k < 1 || k > d) throw std::invalid_argument("blei: need 1 <= k <= d");

  const auto subsets = subsets_of_size(d, d - k);
  BigInt work = 0;
  for (const auto& S : subsets)
    work += card_space(IndexSpace(d, n, S, family)) *
            card_space(IndexSpace(d, n, complement(d, S), family));
  if (work > cap) throw CapExceeded("blei: literal enumeration too large", work, cap);

  const double inner_exp = static_cast<double>(k) / (k + 1);
  const double outer_exp = static_cast<double>(k + 1) / (2.0 * k);
  std::vector<double> terms;
  std::vector<int> glued(static_cast<std::size_t>(d));
  for (const auto& S : subsets) {
    const IndexSpace inner_space(d, n, S, family);
    const IndexSpace outer_space(d, n, complement(d, S), family);
    double outer = 0.0;
    for (IndexCursor j(outer_space); !j.done(); j.advance()) {
      double inner = 0.0;
      for (IndexCursor i(inner_space); !i.done(); i.advance()) {
        for (std::size_t s = 0; s < S.size(); ++s)
          glued[static_cast<std::size_t>(S[s] - 1)] = i.values()[s];
        for (std::size_t s = 0; s < outer_space.slots().size(); ++s)
          glued[static_cast<std::size_t>(outer_space.slots()[s] - 1)] = j.values()[s];
        Complex a{};
        if (family == Monotonicity::non_decreasing) {
          if (std::is_sorted(glued.begin(), glued.end())) a = table.at(glued);
        } else {
          std::vector<int> sorted = glued;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) a = table.at(sorted);
        }
        inner += std::norm(a);
      }
      if (inner > 0.0) outer += std::pow(inner, inner_exp);
    }
    terms.push_back(std::pow(outer, outer_exp));
  }
  return terms;
}

}  // namespace sidonlab::kernels
