#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sidonlab/bleiverify.hpp"
#include "sidonlab/norms.hpp"

using namespace sidonlab;

namespace {

CoefficientTable random_table(int n, int d, Monotonicity cls, bool unimodular, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> ph(0.0, 2 * std::numbers::pi);
  CoefficientTable t(n, d, cls);
  for_each_index(IndexSpace::full(d, n, cls), [&](std::span<const int> v) {
    if (!unimodular && rng() % 3 == 0) return;
    t.set({v.begin(), v.end()}, unimodular ? std::polar(1.0, ph(rng)) : Complex(g(rng), g(rng)));
  });
  return t;
}

// B literally: geometric mean over |S| = k of
//   ( sum_{i in M(S)} ( sum_{j in M(S^c)} |[m]| |b_m|^2 )^{k/(k+1)} )^{(k+1)/(2k)},
// m the glued map and b_m = a_{r(m)} / |[r(m)]|.
double chain_B_oracle(const Polynomial& p, int k) {
  const int d = p.d(), n = p.n();
  double log_sum = 0.0;
  const auto subsets = subsets_of_size(d, k);
  for (const auto& S : subsets) {
    const auto Sc = complement(d, S);
    double outer = 0.0;
    for_each_index(IndexSpace(d, n, S, Monotonicity::unrestricted), [&](std::span<const int> i) {
      double inner = 0.0;
      for_each_index(IndexSpace(d, n, Sc, Monotonicity::unrestricted), [&](std::span<const int> j) {
        std::vector<int> m(static_cast<std::size_t>(d));
        for (std::size_t s = 0; s < S.size(); ++s) m[S[s] - 1] = i[s];
        for (std::size_t s = 0; s < Sc.size(); ++s) m[Sc[s] - 1] = j[s];
        std::vector<int> r = m;
        std::sort(r.begin(), r.end());
        const double orbit = to_double(orbit_size(r));
        const double b = std::abs(p.coefficients().at(r)) / orbit;
        inner += orbit * b * b;
      });
      outer += std::pow(inner, static_cast<double>(k) / (k + 1));
    });
    log_sum += (k + 1.0) / (2.0 * k) * std::log(outer);
  }
  return std::exp(log_sum / subsets.size());
}

}  // namespace

TEST_CASE("variant names") {
  for (auto v : {BleiVariant::complex_form, BleiVariant::boolean, BleiVariant::boolean_strengthened})
    CHECK(blei_variant_from_string(to_string(v)) == v);
  CHECK_THROWS_AS(blei_variant_from_string("other"), std::invalid_argument);
}

TEST_CASE("single coefficient") {
  for (int d = 1; d <= 4; ++d)
    for (int k = 1; k <= d; ++k) {
      CoefficientTable cube(6, d, Monotonicity::strictly_increasing);
      std::vector<int> idx;
      for (int s = 1; s <= d; ++s) idx.push_back(s + 1);
      cube.set(idx, Complex(0.0, -2.5));
      const auto b = blei_sides(cube, k, BleiVariant::boolean);
      CHECK(b.lhs == doctest::Approx(2.5));
      // the value set splits into increasing i and j in C(d,k) ways
      const double rows = to_double(binomial(d, k));
      CHECK(b.rhs == doctest::Approx(std::pow(rows, (k + 1.0) / (2.0 * k)) * 2.5));
      CHECK(b.lhs <= b.rhs);
      CoefficientTable torus(3, d, Monotonicity::non_decreasing);
      torus.set(std::vector<int>(static_cast<std::size_t>(d), 2), 0.75);
      const auto c = blei_sides(torus, k, BleiVariant::complex_form);
      CHECK(c.lhs == doctest::Approx(0.75));
      CHECK(c.rhs == doctest::Approx(0.75));
    }
}

TEST_CASE("unimodular boolean example d=2, k=1, n=3") {
  const auto p = Polynomial::all_ones(Domain::cube, 3, 2);
  const auto b = blei_sides(p.coefficients(), 1, BleiVariant::boolean);
  CHECK(b.lhs == doctest::Approx(2.279507056954777642).epsilon(1e-15));
  REQUIRE(b.per_subset_terms.size() == 2);
  for (const auto& [S, term] : b.per_subset_terms) CHECK(term == doctest::Approx(3.0 * std::sqrt(2.0)));
  CHECK(b.rhs == doctest::Approx(3.0 * std::sqrt(2.0)));
  const auto s = blei_sides(p.coefficients(), 1, BleiVariant::boolean_strengthened);
  CHECK(s.strengthening_factor == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(s.rhs == doctest::Approx(3.0));
  CHECK_FALSE(s.violated());
}

TEST_CASE("variant must match the table") {
  const auto p = Polynomial::all_ones(Domain::cube, 3, 2);
  CHECK_THROWS_AS(blei_sides(p.coefficients(), 1, BleiVariant::complex_form), std::invalid_argument);
  CHECK_THROWS_AS(blei_sides(p.coefficients(), 3, BleiVariant::boolean), std::invalid_argument);
}

TEST_CASE("Blei soundness on random tables") {
  std::mt19937_64 rng(41);
  int tables = 0;
  for (int t = 0; t < 120; ++t) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const int n = d + static_cast<int>(rng() % (6 - d));
    const bool unimodular = t % 2 == 0;
    for (auto [cls, variant] : {std::pair{Monotonicity::non_decreasing, BleiVariant::complex_form},
                                std::pair{Monotonicity::strictly_increasing, BleiVariant::boolean}}) {
      const auto table = random_table(n, d, cls, unimodular, rng);
      if (table.size() == 0) continue;
      ++tables;
      for (int k = 1; k <= d; ++k) {
        const auto b = blei_sides(table, k, variant);
        CHECK(b.lhs <= b.rhs * (1 + 1e-9));
      }
    }
  }
  CHECK(tables >= 200);
}

TEST_CASE("strengthened Blei on unimodular cube tables, d <= 4, n <= 6") {
  // Both sides depend on |a| only, so one phase pattern per shape covers all.
  std::mt19937_64 rng(42);
  for (int d = 1; d <= 4; ++d)
    for (int n = d; n <= 6; ++n)
      for (int k = 1; k <= d; ++k) {
        const auto table = random_table(n, d, Monotonicity::strictly_increasing, true, rng);
        const auto b = blei_sides(table, k, BleiVariant::boolean_strengthened);
        CHECK(b.lhs <= b.rhs * (1 + 1e-9));
        // subset symmetry: every per-subset factor is the same
        for (const auto& [S, term] : b.per_subset_terms)
          CHECK(term == doctest::Approx(b.per_subset_terms.front().second).epsilon(1e-12));
        if (k == d) CHECK(b.lhs == doctest::Approx(b.rhs));
      }
}

TEST_CASE("chain A") {
  const auto a = chain_A(3, 2, 1);
  CHECK(a.A == doctest::Approx(std::pow(6.0, 0.75)).epsilon(1e-15));
  CHECK(a.A_bound == doctest::Approx(std::sqrt(18.0)).epsilon(1e-15));
  CHECK(a.A <= a.A_bound);
  const auto eq = chain_A(7, 4, 4);
  CHECK(eq.A == doctest::Approx(eq.A_bound).epsilon(1e-14));
  const auto big = chain_A(30, 5, 2);
  CHECK(big.A <= big.A_bound * (1 + 1e-9));
  for (int n = 1; n <= 20; ++n)
    for (int d = 1; d <= std::min(n, 8); ++d)
      for (int k = 1; k <= d; ++k) {
        const auto c = chain_A(n, d, k);
        CHECK(c.A <= c.A_bound * (1 + 1e-9));
      }
}

TEST_CASE("chain B envelopes") {
  const BoundConfig cfg;
  const auto b = chain_B_bounds(9, 3, 1, cfg);
  CHECK(std::isfinite(b.lower));
  CHECK(std::isfinite(b.upper));
  CHECK(b.lower <= b.upper);
  // k = 1: the falling factorial is d, HC = e^{4(d-1)/2}, BH form = 1.
  const auto c = chain_B_bounds(5, 4, 1, cfg, 1.0);
  CHECK(c.upper == doctest::Approx(std::pow(4.0, -0.5) * std::exp(6.0) * std::pow(4.0, 4) / std::pow(3.0, 3)));
}

TEST_CASE("chain B exact") {
  const auto p = Polynomial::from_phases(2, 2, {{{1, 1}, 0.0}, {{1, 2}, 0.0}, {{2, 2}, 0.0}});
  CHECK(chain_B_exact(p, 1) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
  const auto env = chain_B_bounds(2, 2, 1, BoundConfig{});
  CHECK(env.lower == doctest::Approx(2.0));

  const auto single = Polynomial::from_phases(3, 3, {{{1, 2, 2}, 1.0}});
  for (int k = 1; k <= 3; ++k) CHECK(chain_B_exact(single, k) == doctest::Approx(chain_B_oracle(single, k)));

  std::mt19937_64 rng(43);
  for (int d = 2; d <= 4; ++d)
    for (int n = 2; n <= 4; ++n) {
      const Polynomial q(Domain::torus, random_table(n, d, Monotonicity::non_decreasing, true, rng));
      for (int k = 1; k <= d; ++k)
        CHECK(chain_B_exact(q, k) == doctest::Approx(chain_B_oracle(q, k)).epsilon(1e-12));
    }
  CHECK_THROWS_AS(chain_B_exact(Polynomial::all_ones(Domain::torus, 10, 6), 2, 1000), CapExceeded);
}

TEST_CASE("chain B: B_exact against the envelopes with unit constants") {
  // The envelope constants are unspecified; record the smallest c that makes
  // c * B_lower <= B_exact hold and check B_exact <= B_upper with the
  // ascent estimate standing in for the sup-norm.
  const BoundConfig cfg;
  double c_needed = 0.0;
  std::mt19937_64 rng(44);
  for (int d = 2; d <= 4; ++d)
    for (int n = d; n <= 5; ++n) {
      const Polynomial p(Domain::torus, random_table(n, d, Monotonicity::non_decreasing, true, rng));
      const auto sup = supnorm_torus_estimate(p);
      for (int k = 1; k < d; ++k) {
        const auto q = chain_quantities(p, k, cfg, sup.value);
        CHECK(q.B_exact <= q.B_upper * (1 + 1e-9));
        CHECK(q.A <= q.A_bound * (1 + 1e-9));
        c_needed = std::max(c_needed, q.B_lower / q.B_exact);
      }
    }
  MESSAGE("largest B_lower / B_exact with c = 1: " << c_needed);
  CHECK(c_needed > 0.0);
}

TEST_CASE("orbit ratio check") {
  const auto u = Monotonicity::unrestricted;
  // j constant, i with fresh distinct values: equality
  const MultiIndex i({1, 2}, {1, 2}, 5, u);
  const MultiIndex j({3, 4}, {3, 3}, 5, u);
  CHECK(ij_ratio_check(i, j));
  CHECK(orbit_size(std::vector<int>{1, 2, 3, 3}) == falling_factorial(4, 2) * orbit_size(j));
  const MultiIndex empty({}, {}, 5, u);
  const MultiIndex all({1, 2, 3}, {2, 2, 1}, 5, u);
  CHECK(ij_ratio_check(empty, all));
  CHECK_THROWS_AS(ij_ratio_check(i, MultiIndex({2, 3}, {1, 1}, 5, u)), std::invalid_argument);
  for (int d = 1; d <= 4; ++d)
    for (int k = 0; k <= d; ++k)
      for (const auto& S : subsets_of_size(d, k)) {
        const auto Sc = complement(d, S);
        for_each_index(IndexSpace(d, 4, S, u), [&](std::span<const int> iv) {
          for_each_index(IndexSpace(d, 4, Sc, u), [&](std::span<const int> jv) {
            CHECK(ij_ratio_check(MultiIndex(S, {iv.begin(), iv.end()}, 4, u),
                                 MultiIndex(Sc, {jv.begin(), jv.end()}, 4, u)));
          });
        });
      }
}

TEST_CASE("elem / denom / win reports") {
  auto find = [](const std::vector<BoundReport>& rs, const std::string& name) {
    for (const auto& r : rs)
      if (r.name == name) return r;
    FAIL("missing report " << name);
    return rs.front();
  };
  const auto a = elem_denom_win(7, 3, 3);
  CHECK(find(a, "win_ratio").value == doctest::Approx(1.0));
  const auto b = elem_denom_win(5, 3, 1);
  CHECK(find(b, "win_ratio").value == doctest::Approx(1 / std::sqrt(3.0)));
  CHECK(*find(b, "win_ratio_squared").exact_value == Rational(1, 3));
  CHECK(find(b, "elem").value / find(b, "denom").value == doctest::Approx(1 / std::sqrt(3.0)));
  const auto c = elem_denom_win(9, 4, 2);
  CHECK(find(c, "win_ratio").value == doctest::Approx(1 / std::sqrt(6.0)));
  CHECK(*find(c, "win_ratio_squared").exact_value == Rational(1, 6));
}
