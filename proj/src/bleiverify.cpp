#include "sidonlab/bleiverify.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sidonlab/kernels.hpp"
#include "sidonlab/norms.hpp"

namespace sidonlab {

std::string to_string(BleiVariant v) {
  switch (v) {
    case BleiVariant::complex_form: return "complex";
    case BleiVariant::boolean: return "boolean";
    case BleiVariant::boolean_strengthened: return "boolean-strengthened";
  }
  return "?";
}

BleiVariant blei_variant_from_string(const std::string& s) {
  if (s == "complex") return BleiVariant::complex_form;
  if (s == "boolean") return BleiVariant::boolean;
  if (s == "boolean-strengthened") return BleiVariant::boolean_strengthened;
  throw std::invalid_argument("unknown Blei variant '" + s + "'");
}

BleiSides blei_sides(const CoefficientTable& coeffs, int k, BleiVariant variant) {
  const int d = coeffs.d();
  const auto want = variant == BleiVariant::complex_form ? Monotonicity::non_decreasing
                                                         : Monotonicity::strictly_increasing;
  if (coeffs.monotonicity() != want)
    throw std::invalid_argument("blei_sides: " + to_string(variant) + " variant needs a " +
                                to_string(want) + " table");
  if (k < 1 || k > d) throw std::invalid_argument("blei_sides: need 1 <= k <= d");

  BleiSides out;
  out.variant = variant;
  out.k = k;
  const double p = 2.0 * d / (d + 1.0);
  double sum = 0.0;
  for (const auto& [index, a] : coeffs.entries()) sum += std::pow(std::abs(a), p);
  out.lhs = std::pow(sum, 1.0 / p);

  const auto terms = kernels::blei_terms_parallel(coeffs, k);
  const auto subsets = subsets_of_size(d, d - k);
  double log_sum = 0.0;
  bool zero = false;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    out.per_subset_terms.emplace_back(subsets[s], terms[s]);
    if (terms[s] <= 0.0)
      zero = true;
    else
      log_sum += std::log(terms[s]);
  }
  out.rhs_unstrengthened = zero ? 0.0 : std::exp(log_sum / static_cast<double>(subsets.size()));
  if (variant == BleiVariant::boolean_strengthened)
    out.strengthening_factor = 1.0 / std::sqrt(to_double(binomial(d, k)));
  out.rhs = out.rhs_unstrengthened * out.strengthening_factor;
  return out;
}

ChainA chain_A(int n, int d, int k) {
  if (!(1 <= k && k <= d && d <= n)) throw std::invalid_argument("chain_A: need 1 <= k <= d <= n");
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float big(binomial(n + d - 1, d));
  const Float small(binomial(n + k - 1, k));
  ChainA out;
  out.A = static_cast<double>(pow(big, Float(d + 1) / Float(2 * d)));
  out.A_bound = static_cast<double>(pow(small, Float(1) / Float(2 * k)) * sqrt(big));
  return out;
}

ChainB chain_B_bounds(int n, int d, int k, const BoundConfig& cfg, double sup_norm) {
  if (!(1 <= k && k < d && d <= n)) throw std::invalid_argument("chain_B_bounds: need 1 <= k < d <= n");
  const double log_ff = log_of(falling_factorial(d, k));
  const double outer = (k + 1.0) / (2.0 * k);
  ChainB out;
  out.lower = cfg.c_abs *
              std::exp(-0.5 * log_ff + 0.5 * log_of(binomial(n + d - k - 1, d - k)) +
                       outer * log_of(factorial(k)) + outer * log_of(binomial(n + k - 1, k)));
  const double log_bh_form = cfg.c0 * std::log(static_cast<double>(k));
  out.upper = sup_norm * std::exp(-0.5 * log_ff + std::log(hc_constant(d, k)) + log_bh_form +
                                  d * std::log(static_cast<double>(d)) -
                                  (d - k) * std::log(static_cast<double>(d - k)));
  return out;
}

double chain_B_exact(const Polynomial& p, int k, std::uint64_t cap) {
  if (p.domain() != Domain::torus || !p.homogeneous())
    throw std::invalid_argument("chain_B_exact: homogeneous torus polynomial required");
  const int d = p.d();
  const int n = p.n();
  if (k < 1 || k > d) throw std::invalid_argument("chain_B_exact: need 1 <= k <= d");
  const BigInt maps = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(d));
  const BigInt work = maps * binomial(d, k);
  if (work > cap) throw CapExceeded("chain_B_exact: enumeration too large", work, cap);

  // weight[m] = |[m]| |b_m|^2 = |a_{r(m)}|^2 / |[m]| for every m in M(d,n),
  // m encoded base n with slot 1 most significant.
  const auto total = maps.convert_to<std::size_t>();
  std::vector<double> weight(total, 0.0);
  std::vector<int> m(static_cast<std::size_t>(d));
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (int s = d - 1; s >= 0; --s) {
      m[static_cast<std::size_t>(s)] = static_cast<int>(rest % static_cast<std::size_t>(n)) + 1;
      rest /= static_cast<std::size_t>(n);
    }
    std::vector<int> r = m;
    std::sort(r.begin(), r.end());
    const Complex a = p.coefficients().at(r);
    if (a != Complex{}) weight[code] = std::norm(a) / to_double(orbit_size(r));
  }

  std::vector<std::size_t> stride(static_cast<std::size_t>(d));
  std::size_t acc = 1;
  for (int s = d - 1; s >= 0; --s) {
    stride[static_cast<std::size_t>(s)] = acc;
    acc *= static_cast<std::size_t>(n);
  }

  const double inner_exp = static_cast<double>(k) / (k + 1);
  const double outer_exp = (k + 1.0) / (2.0 * k);
  const auto subsets = subsets_of_size(d, k);
  double log_sum = 0.0;
  for (const auto& S : subsets) {
    const auto Sc = complement(d, S);
    const IndexSpace outer_space(d, n, S, Monotonicity::unrestricted);
    const IndexSpace inner_space(d, n, Sc, Monotonicity::unrestricted);
    double outer = 0.0;
    for (IndexCursor i(outer_space); !i.done(); i.advance()) {
      std::size_t base = 0;
      for (std::size_t s = 0; s < S.size(); ++s)
        base += static_cast<std::size_t>(i.values()[s] - 1) * stride[static_cast<std::size_t>(S[s] - 1)];
      double inner = 0.0;
      for (IndexCursor j(inner_space); !j.done(); j.advance()) {
        std::size_t code = base;
        for (std::size_t s = 0; s < Sc.size(); ++s)
          code += static_cast<std::size_t>(j.values()[s] - 1) * stride[static_cast<std::size_t>(Sc[s] - 1)];
        inner += weight[code];
      }
      if (inner > 0.0) outer += std::pow(inner, inner_exp);
    }
    if (outer <= 0.0) return 0.0;
    log_sum += outer_exp * std::log(outer);
  }
  return std::exp(log_sum / static_cast<double>(subsets.size()));
}

ChainQuantities chain_quantities(const Polynomial& p, int k, const BoundConfig& cfg,
                                 double sup_norm, std::uint64_t cap) {
  ChainQuantities out;
  const int n = p.n();
  const int d = p.d();
  out.A = coeff_lp_norm(p, 2.0 * d / (d + 1.0));
  out.A_bound = chain_A(n, d, k).A_bound;
  out.B_exact = chain_B_exact(p, k, cap);
  const auto env = chain_B_bounds(n, d, k, cfg, sup_norm);
  out.B_lower = env.lower;
  out.B_upper = env.upper;
  return out;
}

bool ij_ratio_check(const MultiIndex& i, const MultiIndex& j) {
  const int k = static_cast<int>(i.size());
  const int d = k + static_cast<int>(j.size());
  std::vector<int> slots = i.slots();
  slots.insert(slots.end(), j.slots().begin(), j.slots().end());
  std::sort(slots.begin(), slots.end());
  for (int s = 0; s < d; ++s)
    if (slots[static_cast<std::size_t>(s)] != s + 1)
      throw std::invalid_argument("ij_ratio_check: slot sets must partition [d]");
  std::vector<int> glued = i.values();
  glued.insert(glued.end(), j.values().begin(), j.values().end());
  return orbit_size(glued) <= falling_factorial(d, k) * orbit_size(j);
}

std::vector<BoundReport> elem_denom_win(int n, int d, int k) {
  const Rational win = win_ratio_identity(k, d, n);  // throws unless 1/C(d,k)
  const double l_nd = log_of(binomial(n, d));
  const double l_nk = log_of(binomial(n, k));
  const double l_rest = log_of(binomial(n - k, d - k));
  const std::vector<std::pair<std::string, long>> inputs = {{"n", n}, {"d", d}, {"k", k}};

  BoundReport elem{"elem", inputs, std::exp(0.5 * l_nd + l_nk / (2.0 * k)), 0.0, std::nullopt,
                   "C(n,d)^(1/2) C(n,k)^(1/(2k))"};
  BoundReport denom{"denom", inputs,
                    std::exp(0.5 * l_rest + (k + 1.0) / (2.0 * k) * l_nk), 0.0, std::nullopt,
                    "C(n-k,d-k)^(1/2) C(n,k)^((k+1)/(2k))"};
  BoundReport ratio{"win_ratio", inputs, std::exp(0.5 * (l_nd - l_rest - l_nk)), 0.0, std::nullopt,
                    "elem / denom = C(d,k)^(-1/2)"};
  BoundReport squared{"win_ratio_squared", inputs, to_double(win), 0.0, win,
                      "C(n,d) / (C(n-k,d-k) C(n,k)) = 1/C(d,k)"};
  for (auto* r : {&elem, &denom, &ratio, &squared}) r->log_value = std::log(r->value);
  return {elem, denom, ratio, squared};
}

}  // namespace sidonlab
