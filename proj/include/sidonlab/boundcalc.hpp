#pragma once

// Explicit constants, coefficient bounds and regime boundaries. Logarithms
// are natural throughout.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sidonlab/indexcomb.hpp"
#include "sidonlab/norms.hpp"
#include "sidonlab/polyform.hpp"

namespace sidonlab {

/// Tunable constants. Those without a known value default to 1.
struct BoundConfig {
  double c0 = 0.4;        // BH for k-forms grows like k^{c0}
  double a = 0.39;        // multilinear BH exponent
  double tau = 0.1;       // slack in the complex exponent
  double C_tau = 1.0;
  double C0 = 1.0;        // Sidon exponent constant, S(d) <= e^{C0 sqrt(d log d)}
  double C1 = 1.0;        // prefactor of the earlier complex bound
  double c_abs = 1.0;     // d^2 <= c n regime constant, and c in e^{c k^2/d}
  double K = 3.0;         // Aaronson-Ambainis exponent
  double epsilon = 0.5;   // d >= n^eps counts as trivial
  double compa_C = 3.0;   // promise k <= compa_C sqrt(d)
  double C_aa = 1.0;      // constant of the Aaronson-Ambainis inequality

  /// Throws std::invalid_argument unless every constant is positive.
  void validate() const;
};

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, long>> inputs;
  double value = 0.0;
  double log_value = 0.0;  // log(value), finite even when value overflows
  std::optional<Rational> exact_value;
  std::string formula;
};

class RegimeMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// L^2 / L^{2k/(k+1)} hypercontractivity bound e^{4(d-k)/(3k-1)}.
double hc_constant(int d, int k);

/// Signed monomial coefficients of T_m, index = power.
std::vector<BigInt> chebyshev_coefficients(int m);

/// |[x^k] T_d|; zero when d - k is odd.
BigInt chebyshev_coefficient_abs(int d, int k);

/// |[x^k] T_d| when d = k (mod 2), otherwise |[x^k] T_{d-1}|.
BigInt chebyshev_L(int d, int k);

/// log L(d,k) from the explicit coefficient formula
/// |[x^{d-2m}] T_d| = 2^{d-2m-1} d/(d-m) C(d-m,m); usable for large d.
double log_chebyshev_L(int d, int k);

/// L(d,k) (d-k)! k! d^d / (d! k^k (d-k)^{d-k}), exact and floated.
BoundReport markov_step_bound(int d, int k);

struct OptimalK {
  double formula_real = 0.0;  // (2 sqrt 2 / sqrt 3) sqrt(d / log d)
  int k_formula = 1;          // rounded half away from zero, clamped to [1, d-1]
  int k_exhaustive = 1;       // argmin of the complex objective over k <= k_max, smallest on ties
  int k_max = 1;              // min(d-1, floor(compa_C sqrt d))
};

/// Largest k allowed by the promise k <= compa_C sqrt(d), clamped to [1, d-1].
int promise_k_max(int d, const BoundConfig& cfg);

/// log of k^{c0} e^{c k^2/d} e^{4d/(3k) + (1/2) k log d + 2k - k log k}.
double complex_k_objective_log(int d, int k, const BoundConfig& cfg);
OptimalK optimal_k_complex(int d, const BoundConfig& cfg);

/// C_tau e^{(sqrt 2/sqrt 3 + tau) sqrt(d log d)}
BoundReport bound_complex(int d, const BoundConfig& cfg);
/// C1 e^{(4/sqrt 3) sqrt(d log d) + (8/sqrt 3) sqrt(d / log d)}
BoundReport bound_bps(int d, const BoundConfig& cfg);

struct BooleanBound {
  BoundReport strengthened;    // min_k C(d,k)^{-1/2} e^{(d-k)/2k} (1+k/(d-k))^{d-k} (d/k)^{2k}
  int k_strengthened = 1;
  BoundReport unstrengthened;  // same without C(d,k)^{-1/2}
  int k_unstrengthened = 1;
  BoundReport simplified;      // min_k e^{d/(2k) + (3/2) k log d - (3/2) k log k}
  int k_simplified = 1;
  BoundReport simplified_2k;   // min_k e^{d/(2k) + 2 k log d - 2 k log k}
  int k_simplified_2k = 1;
  int k_max = 1;               // the minima above run over 1 <= k <= k_max
  BoundReport literal;         // strengthened expression minimized over all 1 <= k <= d-1
  int k_literal = 1;
};

double boolean_strengthened_log(int d, int k);
double boolean_unstrengthened_log(int d, int k);
BooleanBound bound_boolean(int d, const BoundConfig& cfg);

struct HelperInequality {
  bool holds = false;
  bool decided_exactly = false;  // false: decided by 100-digit floats
};

/// C(d^2+d-1, d) <= e^d (d+1)^d with e^d replaced by a rational lower bound.
HelperInequality trivial_regime_helper(int d);

struct TrivialRegime {
  double root = 0.0;  // C(n+d-1,d)^{1/(2d)}
  double cap = 0.0;   // sqrt(e (d+1))
  HelperInequality helper;
};

/// Requires n <= d^2; throws RegimeMismatch otherwise.
TrivialRegime trivial_regime(int n, int d);

enum class Regime { interesting, trivial };
std::string to_string(Regime r);

/// interesting iff d^2 <= c_abs n (ties interesting).
Regime regime_classify(long n, int d, const BoundConfig& cfg);

struct AAQuantities {
  int degree = 0;
  double variance = 0.0;
  std::vector<double> influences;
  double max_influence = 0.0;
  double lhs = 0.0;  // (Var/d)^K
  double rhs = 0.0;  // C_aa max Inf sup^{2K-2}
};

AAQuantities aa_quantities(const Polynomial& f, const SupNormEstimate& sup, const BoundConfig& cfg);

struct AARegimeRow {
  long n = 0;
  double n_eps = 0.0;
  int d_star = 0;            // largest d with n^{1/2} e^{-C0 sqrt(d log d)} > 1
  bool gap_nonempty = false; // some integer d with d_star < d < n^eps
  double log_trivial = 0.0;  // log C(n,d*)^{1/2}
  double log_sidon = 0.0;    // log of n^{1/2} e^{-C0 sqrt(d* log d*)} C(n,d*)^{1/2}
  double log_required = 0.0; // log of C(n,d*)^{1/2} n^{1/(2K-2)} / (C_aa d*^{(K+1)/(2K-2)})
};

AARegimeRow aa_regimes(long n, const BoundConfig& cfg);

enum class AARegime { trivial, sidon, gap };
std::string to_string(AARegime r);
/// trivial if d >= n^eps or d^{K+1} >= n; sidon if d <= d*(n); gap otherwise.
AARegime aa_regime_of(long n, int d, const BoundConfig& cfg);

/// log C(n, k) via lgamma.
double log_binomial(double n, double k);

}  // namespace sidonlab
