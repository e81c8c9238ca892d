#include "sidonlab/boundcalc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace sidonlab {

void BoundConfig::validate() const {
  const std::pair<const char*, double> fields[] = {
      {"c0", c0},   {"a", a},         {"tau", tau}, {"C_tau", C_tau},     {"C0", C0},     {"C1", C1},
      {"c_abs", c_abs}, {"K", K}, {"epsilon", epsilon}, {"compa_C", compa_C}, {"C_aa", C_aa}};
  for (const auto& [name, v] : fields)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string("BoundConfig: ") + name + " must be positive");
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double hc_constant(int d, int k) {
  if (k < 1 || k > d) throw std::invalid_argument("hc_constant: need 1 <= k <= d");
  return std::exp(4.0 * (d - k) / (3.0 * k - 1.0));
}

std::vector<BigInt> chebyshev_coefficients(int m) {
  if (m < 0) throw std::invalid_argument("chebyshev_coefficients: negative degree");
  std::vector<BigInt> prev{1};  // T_0
  if (m == 0) return prev;
  std::vector<BigInt> cur{0, 1};  // T_1
  for (int j = 2; j <= m; ++j) {
    std::vector<BigInt> next(static_cast<std::size_t>(j) + 1, 0);
    for (std::size_t e = 0; e < cur.size(); ++e) next[e + 1] += 2 * cur[e];
    for (std::size_t e = 0; e < prev.size(); ++e) next[e] -= prev[e];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt chebyshev_coefficient_abs(int d, int k) {
  if (k < 0 || k > d) throw std::invalid_argument("chebyshev coefficient: need 0 <= k <= d");
  return abs(chebyshev_coefficients(d)[static_cast<std::size_t>(k)]);
}

BigInt chebyshev_L(int d, int k) {
  if (k < 0 || k > d) throw std::invalid_argument("chebyshev_L: need 0 <= k <= d");
  if ((d - k) % 2 == 0) return chebyshev_coefficient_abs(d, k);
  return chebyshev_coefficient_abs(d - 1, k);
}

double log_chebyshev_L(int d, int k) {
  if (k < 0 || k > d) throw std::invalid_argument("log_chebyshev_L: need 0 <= k <= d");
  const int D = (d - k) % 2 == 0 ? d : d - 1;
  if (D == 0) return 0.0;  // T_0 = 1
  const int m = (D - k) / 2;
  return (k - 1) * std::log(2.0) + std::log(static_cast<double>(D) / (D - m)) + log_binomial(D - m, m);
}

BoundReport markov_step_bound(int d, int k) {
  if (k < 1 || k > d - 1) throw std::invalid_argument("markov_step_bound: need 1 <= k <= d-1");
  namespace mp = boost::multiprecision;
  const BigInt num = chebyshev_L(d, k) * factorial(d - k) * factorial(k) *
                     mp::pow(BigInt(d), static_cast<unsigned>(d));
  const BigInt den = factorial(d) * mp::pow(BigInt(k), static_cast<unsigned>(k)) *
                     mp::pow(BigInt(d - k), static_cast<unsigned>(d - k));
  BoundReport r;
  r.name = "markov_step_bound";
  r.inputs = {{"d", d}, {"k", k}};
  r.exact_value = Rational(num, den);
  r.value = to_double(*r.exact_value);
  r.log_value = std::log(r.value);
  r.formula = "L(d,k) (d-k)! k! d^d / (d! k^k (d-k)^(d-k))";
  return r;
}

double complex_k_objective_log(int d, int k, const BoundConfig& cfg) {
  const double kd = k;
  const double dd = d;
  return cfg.c0 * std::log(kd) + cfg.c_abs * kd * kd / dd + 4.0 * dd / (3.0 * kd) +
         0.5 * kd * std::log(dd) + 2.0 * kd - kd * std::log(kd);
}

int promise_k_max(int d, const BoundConfig& cfg) {
  if (d < 2) throw std::invalid_argument("promise_k_max: need d >= 2");
  const double k = std::floor(cfg.compa_C * std::sqrt(static_cast<double>(d)));
  return static_cast<int>(std::clamp(k, 1.0, d - 1.0));
}

OptimalK optimal_k_complex(int d, const BoundConfig& cfg) {
  if (d < 2) throw std::invalid_argument("optimal_k_complex: need d >= 2");
  OptimalK out;
  out.k_max = promise_k_max(d, cfg);
  out.formula_real = 2.0 * std::sqrt(2.0) / std::sqrt(3.0) * std::sqrt(d / std::log(static_cast<double>(d)));
  out.k_formula = static_cast<int>(std::clamp(std::round(out.formula_real), 1.0, d - 1.0));
  double best = complex_k_objective_log(d, 1, cfg);
  out.k_exhaustive = 1;
  for (int k = 2; k <= out.k_max; ++k) {
    const double v = complex_k_objective_log(d, k, cfg);
    if (v < best) {
      best = v;
      out.k_exhaustive = k;
    }
  }
  return out;
}

BoundReport bound_complex(int d, const BoundConfig& cfg) {
  if (d < 1) throw std::invalid_argument("bound_complex: need d >= 1");
  const double dl = d * std::log(static_cast<double>(d));
  BoundReport r;
  r.name = "bound_complex";
  r.inputs = {{"d", d}};
  r.log_value = std::log(cfg.C_tau) + (std::sqrt(2.0) / std::sqrt(3.0) + cfg.tau) * std::sqrt(dl);
  r.value = std::exp(r.log_value);
  r.formula = "C_tau exp((sqrt2/sqrt3 + tau) sqrt(d log d))";
  return r;
}

BoundReport bound_bps(int d, const BoundConfig& cfg) {
  if (d < 2) throw std::invalid_argument("bound_bps: need d >= 2");
  const double ld = std::log(static_cast<double>(d));
  BoundReport r;
  r.name = "bound_bps";
  r.inputs = {{"d", d}};
  r.log_value = std::log(cfg.C1) + 4.0 / std::sqrt(3.0) * std::sqrt(d * ld) +
                8.0 / std::sqrt(3.0) * std::sqrt(d / ld);
  r.value = std::exp(r.log_value);
  r.formula = "C1 exp((4/sqrt3) sqrt(d log d) + (8/sqrt3) sqrt(d / log d))";
  return r;
}

double boolean_unstrengthened_log(int d, int k) {
  if (k < 1 || k > d - 1) throw std::invalid_argument("boolean bound: need 1 <= k <= d-1");
  const double dd = d;
  const double kd = k;
  return (dd - kd) / (2.0 * kd) + (dd - kd) * std::log1p(kd / (dd - kd)) + 2.0 * kd * std::log(dd / kd);
}

double boolean_strengthened_log(int d, int k) {
  return boolean_unstrengthened_log(d, k) - 0.5 * log_binomial(d, k);
}

namespace {

template <class F>
std::pair<int, double> argmin_k(int k_max, F&& f) {
  int best_k = 1;
  double best = f(1);
  for (int k = 2; k <= k_max; ++k) {
    const double v = f(k);
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  return {best_k, best};
}

BoundReport make_report(std::string name, int d, int k, double log_value, std::string formula) {
  BoundReport r;
  r.name = std::move(name);
  r.inputs = {{"d", d}, {"k", k}};
  r.value = std::exp(log_value);
  r.log_value = log_value;
  r.formula = std::move(formula);
  return r;
}

}  // namespace

BooleanBound bound_boolean(int d, const BoundConfig& cfg) {
  if (d < 2) throw std::invalid_argument("bound_boolean: need d >= 2");
  cfg.validate();
  BooleanBound out;
  const double ld = std::log(static_cast<double>(d));
  const int km = promise_k_max(d, cfg);
  out.k_max = km;
  auto [ks, vs] = argmin_k(km, [&](int k) { return boolean_strengthened_log(d, k); });
  auto [ku, vu] = argmin_k(km, [&](int k) { return boolean_unstrengthened_log(d, k); });
  auto [kl, vl] = argmin_k(d - 1, [&](int k) { return boolean_strengthened_log(d, k); });
  auto [k3, v3] = argmin_k(km, [&](int k) {
    return d / (2.0 * k) + 1.5 * k * ld - 1.5 * k * std::log(static_cast<double>(k));
  });
  auto [k2, v2] = argmin_k(km, [&](int k) {
    return d / (2.0 * k) + 2.0 * k * ld - 2.0 * k * std::log(static_cast<double>(k));
  });
  out.k_strengthened = ks;
  out.strengthened = make_report("boolean_strengthened", d, ks, vs,
                                 "min_k C(d,k)^(-1/2) e^((d-k)/2k) (1+k/(d-k))^(d-k) (d/k)^(2k)");
  out.k_unstrengthened = ku;
  out.unstrengthened = make_report("boolean_unstrengthened", d, ku, vu,
                                   "min_k e^((d-k)/2k) (1+k/(d-k))^(d-k) (d/k)^(2k)");
  out.k_simplified = k3;
  out.simplified = make_report("boolean_simplified", d, k3, v3,
                               "min_k e^(d/2k + (3/2) k log d - (3/2) k log k)");
  out.k_simplified_2k = k2;
  out.simplified_2k = make_report("boolean_simplified_2k", d, k2, v2,
                                  "min_k e^(d/2k + 2 k log d - 2 k log k)");
  out.k_literal = kl;
  out.literal = make_report("boolean_literal", d, kl, vl,
                            "min over 1 <= k <= d-1 of the strengthened expression");
  return out;
}

HelperInequality trivial_regime_helper(int d) {
  if (d < 1) throw std::invalid_argument("trivial_regime_helper: need d >= 1");
  namespace mp = boost::multiprecision;
  const BigInt lhs = binomial(static_cast<long>(d) * d + d - 1, d);
  // Partial sums of sum 1/i! bound e from below, so e_low^d (d+1)^d <= e^d (d+1)^d.
  Rational e_low = 0;
  BigInt fact = 1;
  for (int i = 0; i <= 30; ++i) {
    if (i > 0) fact *= i;
    e_low += Rational(BigInt(1), fact);
  }
  const BigInt p = mp::numerator(e_low);
  const BigInt q = mp::denominator(e_low);
  const auto ud = static_cast<unsigned>(d);
  HelperInequality out;
  if (lhs * mp::pow(q, ud) <= mp::pow(p, ud) * mp::pow(BigInt(d + 1), ud)) {
    out.holds = true;
    out.decided_exactly = true;
    return out;
  }
  using Dec = mp::number<mp::cpp_dec_float<100>>;
  const Dec rhs = mp::exp(Dec(d)) * mp::pow(Dec(d + 1), d);
  out.holds = Dec(lhs) <= rhs;
  out.decided_exactly = false;
  return out;
}

TrivialRegime trivial_regime(int n, int d) {
  if (d < 1 || n < 1) throw std::invalid_argument("trivial_regime: need n, d >= 1");
  if (static_cast<long>(n) > static_cast<long>(d) * d)
    throw RegimeMismatch("trivial_regime: n > d^2 is the interesting regime");
  TrivialRegime out;
  out.root = std::exp(log_of(binomial(n + d - 1, d)) / (2.0 * d));
  out.cap = std::sqrt(std::numbers::e * (d + 1));
  out.helper = trivial_regime_helper(d);
  return out;
}

std::string to_string(Regime r) { return r == Regime::interesting ? "interesting" : "trivial"; }

Regime regime_classify(long n, int d, const BoundConfig& cfg) {
  if (n < 1 || d < 1) throw std::invalid_argument("regime_classify: need n, d >= 1");
  return static_cast<double>(d) * d <= cfg.c_abs * static_cast<double>(n) ? Regime::interesting
                                                                           : Regime::trivial;
}

AAQuantities aa_quantities(const Polynomial& f, const SupNormEstimate& sup, const BoundConfig& cfg) {
  if (f.domain() != Domain::cube) throw std::invalid_argument("aa_quantities: cube polynomial required");
  if (f.d() < 1) throw std::invalid_argument("aa_quantities: degree must be >= 1");
  AAQuantities out;
  out.degree = f.d();
  out.influences.assign(static_cast<std::size_t>(f.n()), 0.0);
  for (const auto& t : f.terms()) {
    if (t.index.empty()) continue;
    const double w = std::norm(t.coeff);
    out.variance += w;
    for (int v : t.index) out.influences[static_cast<std::size_t>(v - 1)] += w;
  }
  for (double inf : out.influences) out.max_influence = std::max(out.max_influence, inf);
  out.lhs = std::pow(out.variance / f.d(), cfg.K);
  out.rhs = cfg.C_aa * out.max_influence * std::pow(sup.value, 2.0 * cfg.K - 2.0);
  return out;
}

namespace {

int crossover_degree(long n, double C0) {
  const double half_log_n = 0.5 * std::log(static_cast<double>(n));
  int d_star = 0;
  for (long d = 1; d <= n; ++d) {
    const double dd = static_cast<double>(d);
    if (C0 * std::sqrt(dd * std::log(dd)) < half_log_n)
      d_star = static_cast<int>(d);
    else
      break;
  }
  return d_star;
}

}  // namespace

AARegimeRow aa_regimes(long n, const BoundConfig& cfg) {
  if (n < 4) throw std::invalid_argument("aa_regimes: need n >= 4");
  cfg.validate();
  if (!(cfg.K > 1.0)) throw std::invalid_argument("aa_regimes: need K > 1");
  AARegimeRow row;
  row.n = n;
  const double ln_n = std::log(static_cast<double>(n));
  row.n_eps = std::pow(static_cast<double>(n), cfg.epsilon);
  row.d_star = crossover_degree(n, cfg.C0);
  row.gap_nonempty = row.d_star + 1.0 < row.n_eps;
  const double ds = row.d_star;
  row.log_trivial = 0.5 * log_binomial(static_cast<double>(n), ds);
  row.log_sidon = 0.5 * ln_n - cfg.C0 * std::sqrt(ds * std::log(ds)) + row.log_trivial;
  row.log_required = row.log_trivial + ln_n / (2.0 * cfg.K - 2.0) - std::log(cfg.C_aa) -
                     (cfg.K + 1.0) / (2.0 * cfg.K - 2.0) * std::log(ds);
  return row;
}

std::string to_string(AARegime r) {
  switch (r) {
    case AARegime::trivial: return "trivial";
    case AARegime::sidon: return "sidon";
    case AARegime::gap: return "gap";
  }
  return "?";
}

AARegime aa_regime_of(long n, int d, const BoundConfig& cfg) {
  if (n < 4 || d < 1) throw std::invalid_argument("aa_regime_of: need n >= 4, d >= 1");
  const double dd = d;
  if (dd >= std::pow(static_cast<double>(n), cfg.epsilon) ||
      (cfg.K + 1.0) * std::log(dd) >= std::log(static_cast<double>(n)))
    return AARegime::trivial;
  if (d <= crossover_degree(n, cfg.C0)) return AARegime::sidon;
  return AARegime::gap;
}

}  // namespace sidonlab
