#include "sidonlab/polyform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sidonlab {

std::string to_string(Domain d) { return d == Domain::torus ? "torus" : "cube"; }

CoefficientTable::CoefficientTable(int n, int d, Monotonicity cls, bool homogeneous)
    : n_(n), d_(d), cls_(cls), homogeneous_(homogeneous) {
  if (n < 1 || d < 0) throw std::invalid_argument("CoefficientTable: need n >= 1, d >= 0");
}

void CoefficientTable::set(std::vector<int> index, Complex value) {
  const int len = static_cast<int>(index.size());
  if (homogeneous_ ? len != d_ : len > d_)
    throw std::invalid_argument("CoefficientTable: index length does not match degree");
  const std::vector<int> slots = [&] {
    std::vector<int> s(index.size());
    for (std::size_t t = 0; t < s.size(); ++t) s[t] = static_cast<int>(t) + 1;
    return s;
  }();
  if (!IndexSpace(std::max(d_, len), n_, slots, cls_).contains(index))
    throw std::invalid_argument("CoefficientTable: index outside the " + to_string(cls_) +
                                " space");
  entries_[std::move(index)] = value;
}

Complex CoefficientTable::at(std::span<const int> index) const {
  auto it = entries_.find(std::vector<int>(index.begin(), index.end()));
  return it == entries_.end() ? Complex{} : it->second;
}

bool CoefficientTable::is_unimodular(double tol) const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return std::abs(std::abs(e.second) - 1.0) <= tol; });
}

Polynomial::Polynomial(Domain domain, CoefficientTable table)
    : domain_(domain), table_(std::move(table)) {
  const auto want =
      domain_ == Domain::torus ? Monotonicity::non_decreasing : Monotonicity::strictly_increasing;
  if (table_.monotonicity() != want)
    throw std::invalid_argument("Polynomial: " + to_string(domain_) + " keys must be " +
                                to_string(want));
  terms_.reserve(table_.size());
  for (const auto& [index, coeff] : table_.entries()) terms_.push_back({index, coeff});
}

Polynomial Polynomial::from_phases(int n, int d,
                                   const std::vector<std::pair<std::vector<int>, double>>& terms,
                                   bool homogeneous) {
  CoefficientTable t(n, d, Monotonicity::non_decreasing, homogeneous);
  for (const auto& [index, phase] : terms) t.set(index, std::polar(1.0, phase));
  return Polynomial(Domain::torus, std::move(t));
}

Polynomial Polynomial::from_signs(int n, int d,
                                  const std::vector<std::pair<std::vector<int>, int>>& terms,
                                  bool homogeneous) {
  CoefficientTable t(n, d, Monotonicity::strictly_increasing, homogeneous);
  for (const auto& [index, sign] : terms) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("from_signs: sign must be +-1");
    t.set(index, Complex(sign, 0.0));
  }
  return Polynomial(Domain::cube, std::move(t));
}

Polynomial Polynomial::all_ones(Domain domain, int n, int d) {
  const auto cls =
      domain == Domain::torus ? Monotonicity::non_decreasing : Monotonicity::strictly_increasing;
  CoefficientTable t(n, d, cls);
  for_each_index(IndexSpace::full(d, n, cls),
                 [&](std::span<const int> v) { t.set({v.begin(), v.end()}, 1.0); });
  return Polynomial(domain, std::move(t));
}

Complex evaluate_unchecked(const Polynomial& p, std::span<const Complex> point) {
  if (static_cast<int>(point.size()) != p.n())
    throw std::invalid_argument("evaluate: point has wrong dimension");
  Complex sum{};
  for (const auto& term : p.terms()) {
    Complex m = term.coeff;
    for (int v : term.index) m *= point[static_cast<std::size_t>(v - 1)];
    sum += m;
  }
  return sum;
}

Complex evaluate(const Polynomial& p, std::span<const Complex> point) {
  if (static_cast<int>(point.size()) != p.n())
    throw std::invalid_argument("evaluate: point has wrong dimension");
  for (const Complex& z : point) {
    if (p.domain() == Domain::torus) {
      if (std::abs(std::abs(z) - 1.0) > 1e-9)
        throw std::invalid_argument("evaluate: torus point is not unimodular");
    } else if (z.imag() != 0.0 || (z.real() != 1.0 && z.real() != -1.0)) {
      throw std::invalid_argument("evaluate: cube point entries must be +-1");
    }
  }
  return evaluate_unchecked(p, point);
}

Point point_from_signs(std::span<const int> signs) {
  Point out(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) out[i] = Complex(signs[i], 0.0);
  return out;
}

Point point_from_phases(std::span<const double> phases) {
  Point out(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) out[i] = std::polar(1.0, phases[i]);
  return out;
}

SymmetricForm::SymmetricForm(const Polynomial& base) : base_(base) {
  if (!base_.homogeneous()) throw std::invalid_argument("SymmetricForm: polynomial not homogeneous");
}

Complex SymmetricForm::coefficient(std::span<const int> j) const {
  std::vector<int> r(j.begin(), j.end());
  std::sort(r.begin(), r.end());
  const Complex a = base_.coefficients().at(r);
  if (a == Complex{}) return a;
  return a / to_double(orbit_size(r));
}

Complex SymmetricForm::value(const std::vector<Point>& points, std::uint64_t cap) const {
  const int d = base_.d();
  if (static_cast<int>(points.size()) != d)
    throw std::invalid_argument("SymmetricForm: need exactly d points");
  for (const auto& pt : points)
    if (static_cast<int>(pt.size()) != base_.n())
      throw std::invalid_argument("SymmetricForm: point has wrong dimension");
  BigInt work = 0;
  for (const auto& term : base_.terms()) work += orbit_size(term.index);
  if (work > cap) throw CapExceeded("SymmetricForm: orbit expansion too large", work, cap);

  Complex total{};
  for (const auto& term : base_.terms()) {
    std::vector<int> perm = term.index;
    Complex orbit_sum{};
    do {
      Complex m{1.0, 0.0};
      for (int s = 0; s < d; ++s)
        m *= points[static_cast<std::size_t>(s)][static_cast<std::size_t>(perm[s] - 1)];
      orbit_sum += m;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += term.coeff / to_double(orbit_size(term.index)) * orbit_sum;
  }
  return total;
}

ExtendedCoefficient::ExtendedCoefficient(ExtensionRule rule, const CoefficientTable& source)
    : rule_(rule), source_(source) {}

Complex ExtendedCoefficient::operator()(const MultiIndex& i, const MultiIndex& j) const {
  const int d = source_.d();
  std::vector<int> slots = i.slots();
  slots.insert(slots.end(), j.slots().begin(), j.slots().end());
  std::sort(slots.begin(), slots.end());
  bool partition = static_cast<int>(slots.size()) == d;
  for (int s = 0; partition && s < d; ++s) partition = slots[static_cast<std::size_t>(s)] == s + 1;
  if (!partition) throw std::invalid_argument("ExtendedCoefficient: slot sets must partition [d]");

  auto injective = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (rule_ == ExtensionRule::flat) {
    if (i.monotonicity() != Monotonicity::strictly_increasing ||
        j.monotonicity() != Monotonicity::strictly_increasing)
      throw std::invalid_argument("flat extension needs strictly increasing blocks");
  } else if (!injective(i.values()) || !injective(j.values())) {
    return {};
  }
  std::vector<int> all = i.values();
  all.insert(all.end(), j.values().begin(), j.values().end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return {};
  const Complex a = source_.at(all);
  if (rule_ == ExtensionRule::c) return a / to_double(factorial(d));
  return a;
}

namespace {

void require_real_cube(const Polynomial& p) {
  if (p.domain() != Domain::cube || !p.homogeneous())
    throw std::invalid_argument("need a homogeneous cube polynomial");
  for (const auto& t : p.terms())
    if (t.coeff.imag() != 0.0) throw std::invalid_argument("need real coefficients");
}

}  // namespace

double mixed_form(const Polynomial& p, std::span<const double> x, std::span<const double> y,
                  int k) {
  require_real_cube(p);
  const int d = p.d();
  if (k < 0 || k > d) throw std::invalid_argument("mixed_form: need 0 <= k <= d");
  if (static_cast<int>(x.size()) != p.n() || static_cast<int>(y.size()) != p.n())
    throw std::invalid_argument("mixed_form: point has wrong dimension");
  // Each support set T contributes a_T / C(d,k) times the t^k coefficient of
  // prod_{v in T} (y_v + t x_v): the orbit of T over slots, grouped by which
  // k elements land in the x-slots.
  std::vector<double> poly;
  double total = 0.0;
  for (const auto& term : p.terms()) {
    poly.assign(static_cast<std::size_t>(d) + 1, 0.0);
    poly[0] = 1.0;
    int deg = 0;
    for (int v : term.index) {
      const double xv = x[static_cast<std::size_t>(v - 1)];
      const double yv = y[static_cast<std::size_t>(v - 1)];
      ++deg;
      for (int e = deg; e >= 1; --e)
        poly[static_cast<std::size_t>(e)] =
            poly[static_cast<std::size_t>(e)] * yv + poly[static_cast<std::size_t>(e - 1)] * xv;
      poly[0] *= yv;
    }
    total += term.coeff.real() * poly[static_cast<std::size_t>(k)];
  }
  return total / to_double(binomial(d, k));
}

PolarizationCoefficient polarization_coefficient(const Polynomial& p, std::span<const double> x,
                                                 std::span<const double> y, int k) {
  require_real_cube(p);
  const int d = p.d();
  if (k < 1 || k > d - 1) throw std::invalid_argument("polarization: need 1 <= k <= d-1");
  const int m = d + 1;

  // Sample p(t) at the Chebyshev-Gauss nodes, take its Chebyshev series, then
  // convert to the monomial basis.
  std::vector<long double> values(static_cast<std::size_t>(m));
  std::vector<long double> nodes(static_cast<std::size_t>(m));
  for (int q = 0; q < m; ++q) {
    const long double t = std::cos(std::numbers::pi_v<long double> * (q + 0.5L) / m);
    nodes[static_cast<std::size_t>(q)] = t;
    long double acc = 0.0L;
    for (const auto& term : p.terms()) {
      long double mono = term.coeff.real();
      for (int v : term.index) {
        const auto uv = static_cast<std::size_t>(v - 1);
        mono *= k * t * x[uv] + static_cast<long double>(d - k) * y[uv];
      }
      acc += mono;
    }
    values[static_cast<std::size_t>(q)] = acc;
  }

  // Monomial coefficients of T_0..T_d.
  std::vector<std::vector<long double>> cheb(static_cast<std::size_t>(m),
                                             std::vector<long double>(static_cast<std::size_t>(m)));
  cheb[0][0] = 1.0L;
  if (m > 1) cheb[1][1] = 1.0L;
  for (int j = 2; j < m; ++j)
    for (int e = 0; e < m; ++e) {
      long double v = -cheb[static_cast<std::size_t>(j - 2)][static_cast<std::size_t>(e)];
      if (e > 0) v += 2.0L * cheb[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(e - 1)];
      cheb[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)] = v;
    }

  long double coeff_k = 0.0L;
  for (int j = 0; j < m; ++j) {
    long double cj = 0.0L;
    for (int q = 0; q < m; ++q)
      cj += values[static_cast<std::size_t>(q)] *
            std::cos(std::numbers::pi_v<long double> * j * (q + 0.5L) / m);
    cj *= (j == 0 ? 1.0L : 2.0L) / m;
    coeff_k += cj * cheb[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }

  PolarizationCoefficient out{};
  out.extracted = static_cast<double>(coeff_k);
  out.predicted = std::pow(static_cast<double>(k), k) * std::pow(static_cast<double>(d - k), d - k) *
                  to_double(binomial(d, k)) * mixed_form(p, x, y, k);
  out.agrees = std::abs(out.extracted - out.predicted) <= 1e-9 * std::max(1.0, std::abs(out.predicted));
  return out;
}

Polynomial as_torus(const Polynomial& p) {
  if (p.domain() == Domain::torus) return p;
  CoefficientTable t(p.n(), p.d(), Monotonicity::non_decreasing, p.homogeneous());
  for (const auto& term : p.terms()) t.set(term.index, term.coeff);
  return Polynomial(Domain::torus, std::move(t));
}

Polynomial lift_nonhomogeneous(const Polynomial& p) {
  if (p.domain() != Domain::torus) throw std::invalid_argument("lift: torus polynomial required");
  const int w = p.n() + 1;
  CoefficientTable q(w, p.d(), Monotonicity::non_decreasing, true);
  for (const auto& term : p.terms()) {
    std::vector<int> index = term.index;
    index.resize(static_cast<std::size_t>(p.d()), w);
    q.set(std::move(index), term.coeff);
  }
  return Polynomial(Domain::torus, std::move(q));
}

}  // namespace sidonlab
