#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sidonlab/polyform.hpp"
#include "sidonlab/polyjson.hpp"

using namespace sidonlab;

namespace {

constexpr double kPi = std::numbers::pi;

Polynomial random_unimodular_torus(int n, int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
  std::vector<std::pair<std::vector<int>, double>> terms;
  for_each_index(IndexSpace::full(d, n, Monotonicity::non_decreasing),
                 [&](std::span<const int> v) { terms.emplace_back(std::vector<int>(v.begin(), v.end()), ph(rng)); });
  return Polynomial::from_phases(n, d, terms);
}

Polynomial random_real_cube(int n, int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CoefficientTable t(n, d, Monotonicity::strictly_increasing);
  for_each_index(IndexSpace::full(d, n, Monotonicity::strictly_increasing),
                 [&](std::span<const int> v) { t.set({v.begin(), v.end()}, g(rng)); });
  return Polynomial(Domain::cube, std::move(t));
}

Point random_torus_point(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
  Point z;
  for (int v = 0; v < n; ++v) z.push_back(std::polar(1.0, ph(rng)));
  return z;
}

// Oracle: the symmetric form summed over all of M(d,n), b_j = a_{sort j}/|[sort j]|.
Complex symmetric_bruteforce(const Polynomial& p, const std::vector<Point>& pts) {
  Complex total{};
  for_each_index(IndexSpace::full(p.d(), p.n(), Monotonicity::unrestricted), [&](std::span<const int> j) {
    std::vector<int> r(j.begin(), j.end());
    std::sort(r.begin(), r.end());
    const Complex a = p.coefficients().at(r);
    if (a == Complex{}) return;
    Complex m = a / to_double(orbit_size(r));
    for (std::size_t s = 0; s < j.size(); ++s) m *= pts[s][static_cast<std::size_t>(j[s] - 1)];
    total += m;
  });
  return total;
}

std::vector<double> random_signs(int n, std::mt19937_64& rng) {
  std::vector<double> x;
  for (int v = 0; v < n; ++v) x.push_back((rng() & 1) ? 1.0 : -1.0);
  return x;
}

}  // namespace

TEST_CASE("evaluate examples") {
  const auto p = Polynomial::from_phases(2, 2, {{{1, 2}, 0.0}});
  const Point one{1.0, 1.0};
  CHECK(std::abs(evaluate(p, one) - Complex(1.0)) < 1e-15);

  const auto q = Polynomial::all_ones(Domain::cube, 3, 2);
  CHECK(evaluate(q, point_from_signs(std::vector<int>{1, 1, 1})).real() == 3.0);

  const auto r = Polynomial::from_phases(2, 2, {{{1, 1}, 0.0}, {{2, 2}, kPi}});
  CHECK(std::abs(evaluate(r, one)) < 1e-15);
}

TEST_CASE("evaluate validates the domain") {
  const auto q = Polynomial::all_ones(Domain::cube, 2, 1);
  CHECK_THROWS_AS(evaluate(q, Point{1.0, 0.5}), std::invalid_argument);
  const auto p = Polynomial::all_ones(Domain::torus, 2, 1);
  CHECK_THROWS_AS(evaluate(p, Point{1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(p, Point{1.0}), std::invalid_argument);
  CHECK(evaluate_unchecked(p, Point{1.0, 0.5}).real() == 1.5);
}

TEST_CASE("coefficient tables check keys") {
  CoefficientTable torus(3, 2, Monotonicity::non_decreasing);
  CHECK_NOTHROW(torus.set({2, 2}, 1.0));
  CHECK_THROWS_AS(torus.set({2, 1}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(torus.set({1, 4}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(torus.set({1}, 1.0), std::invalid_argument);
  CoefficientTable cube(3, 2, Monotonicity::strictly_increasing);
  CHECK_THROWS_AS(cube.set({2, 2}, 1.0), std::invalid_argument);
  CHECK(cube.at(std::vector<int>{1, 2}) == Complex{});
  cube.set({1, 2}, Complex(0.6, 0.8));
  CHECK(cube.is_unimodular());
  cube.set({1, 3}, 2.0);
  CHECK_FALSE(cube.is_unimodular());
  CHECK_THROWS_AS(Polynomial(Domain::cube, torus), std::invalid_argument);
}

TEST_CASE("symmetric form examples") {
  const auto p = Polynomial::from_phases(2, 2, {{{1, 2}, 0.0}});
  const SymmetricForm F(p);
  CHECK(F.coefficient(std::vector<int>{1, 2}) == Complex(0.5));
  CHECK(F.coefficient(std::vector<int>{2, 1}) == Complex(0.5));
  CHECK(F.coefficient(std::vector<int>{1, 1}) == Complex{});
  const Complex v = F.value({Point{1.0, 0.0}, Point{0.0, 1.0}});
  CHECK(std::abs(v - Complex(0.5)) < 1e-15);
}

TEST_CASE("symmetric form: diagonal reproduction of coefficients") {
  std::mt19937_64 rng(11);
  for (int d = 1; d <= 4; ++d) {
    const auto p = random_unimodular_torus(3, d, rng);
    const SymmetricForm F(p);
    for (const auto& [index, a] : p.coefficients().entries()) {
      Complex sum{};
      std::vector<int> perm = index;
      do sum += F.coefficient(perm);
      while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(std::abs(sum - a) < 1e-12);
    }
  }
}

TEST_CASE("symmetric form: diagonal identity, symmetry and brute force") {
  std::mt19937_64 rng(12);
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 4; ++n) {
      const auto p = random_unimodular_torus(n, d, rng);
      const SymmetricForm F(p);
      for (int t = 0; t < 100; ++t) {
        const Point z = random_torus_point(n, rng);
        const std::vector<Point> diag(static_cast<std::size_t>(d), z);
        CHECK(std::abs(F.value(diag) - evaluate(p, z)) <= 1e-10);
      }
      std::vector<Point> pts;
      for (int s = 0; s < d; ++s) pts.push_back(random_torus_point(n, rng));
      const Complex v = F.value(pts);
      CHECK(std::abs(v - symmetric_bruteforce(p, pts)) <= 1e-10);
      std::reverse(pts.begin(), pts.end());
      CHECK(std::abs(v - F.value(pts)) <= 1e-10);
    }
}

TEST_CASE("extension rules") {
  CoefficientTable a(3, 2, Monotonicity::strictly_increasing);
  a.set({1, 3}, 1.0);
  const ExtendedCoefficient flat(ExtensionRule::flat, a);
  const auto si = Monotonicity::strictly_increasing;
  CHECK(flat(MultiIndex({1}, {1}, 3, si), MultiIndex({2}, {1}, 3, si)) == Complex{});
  CHECK(flat(MultiIndex({1}, {3}, 3, si), MultiIndex({2}, {1}, 3, si)) == Complex(1.0));
  const ExtendedCoefficient hat(ExtensionRule::hat, a);
  const ExtendedCoefficient c(ExtensionRule::c, a);
  const MultiIndex i({1}, {3}, 3, Monotonicity::unrestricted);
  const MultiIndex j({2}, {1}, 3, Monotonicity::unrestricted);
  CHECK(c(i, j) == hat(i, j) / 2.0);
  CHECK_THROWS_AS(flat(MultiIndex({1}, {1}, 3, si), MultiIndex({1}, {2}, 3, si)), std::invalid_argument);
}

TEST_CASE("flat extension support has C(n-k, d-k) elements per j") {
  for (int d = 1; d <= 5; ++d)
    for (int n = d; n <= 8; ++n) {
      const auto p = Polynomial::all_ones(Domain::cube, n, d);
      const ExtendedCoefficient flat(ExtensionRule::flat, p.coefficients());
      for (int k = 0; k <= d; ++k) {
        const std::vector<int> Shat = subsets_of_size(d, k).front();
        const std::vector<int> S = complement(d, Shat);
        const IndexSpace js(d, n, Shat, Monotonicity::strictly_increasing);
        const IndexSpace is(d, n, S, Monotonicity::strictly_increasing);
        for (IndexCursor j(js); !j.done(); j.advance()) {
          long count = 0;
          const MultiIndex jm(Shat, j.values(), n, Monotonicity::strictly_increasing);
          for (IndexCursor i(is); !i.done(); i.advance())
            count += flat(MultiIndex(S, i.values(), n, Monotonicity::strictly_increasing), jm) != Complex{};
          CHECK(count == binomial(n - k, d - k));
        }
      }
    }
}

TEST_CASE("mixed form examples") {
  const auto p = Polynomial::from_signs(2, 2, {{{1, 2}, 1}});
  const std::vector<double> x{1, 1}, y{1, -1};
  CHECK(mixed_form(p, x, y, 1) == doctest::Approx(0.0));
  std::mt19937_64 rng(3);
  const auto q = random_real_cube(5, 3, rng);
  const auto u = random_signs(5, rng), w = random_signs(5, rng);
  Point pu, pw;
  for (double s : u) pu.emplace_back(s);
  for (double s : w) pw.emplace_back(s);
  CHECK(mixed_form(q, u, w, 3) == doctest::Approx(evaluate(q, pu).real()));
  CHECK(mixed_form(q, u, w, 0) == doctest::Approx(evaluate(q, pw).real()));
}

TEST_CASE("mixed form agrees with the symmetric form over M(d,n)") {
  std::mt19937_64 rng(4);
  for (int d = 2; d <= 4; ++d)
    for (int k = 0; k <= d; ++k) {
      const auto p = random_real_cube(5, d, rng);
      const auto x = random_signs(5, rng), y = random_signs(5, rng);
      std::vector<Point> pts;
      for (int s = 0; s < d; ++s) {
        Point pt;
        for (int v = 0; v < 5; ++v) pt.emplace_back(s < k ? x[v] : y[v]);
        pts.push_back(pt);
      }
      // For a multilinear table, b_j vanishes off injective j; orbit sizes are d!.
      CHECK(mixed_form(p, x, y, k) == doctest::Approx(symmetric_bruteforce(p, pts).real()).epsilon(1e-12));
    }
}

TEST_CASE("polarization examples") {
  const auto p = Polynomial::from_signs(2, 2, {{{1, 2}, 1}});
  const std::vector<double> one{1, 1};
  const auto pc = polarization_coefficient(p, one, one, 1);
  CHECK(pc.extracted == doctest::Approx(2.0));
  CHECK(pc.predicted == doctest::Approx(2.0));
  CHECK(pc.agrees);

  // L_1 vanishes for x = (1,1), y = (1,-1).
  const auto zero = polarization_coefficient(p, one, std::vector<double>{1, -1}, 1);
  CHECK(std::abs(zero.extracted) < 1e-12);

  // x = y: extracted = C(d,k) k^k (d-k)^{d-k} P(x)
  std::mt19937_64 rng(5);
  const auto q = random_real_cube(4, 3, rng);
  const auto x = random_signs(4, rng);
  Point px;
  for (double s : x) px.emplace_back(s);
  const auto diag = polarization_coefficient(q, x, x, 1);
  CHECK(diag.extracted == doctest::Approx(3.0 * 1.0 * 4.0 * evaluate(q, px).real()).epsilon(1e-9));
}

TEST_CASE("polarization agrees on random instances") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const int n = d + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % (d - 1));
    const auto p = random_real_cube(n, d, rng);
    const auto pc = polarization_coefficient(p, random_signs(n, rng), random_signs(n, rng), k);
    CHECK(pc.agrees);
  }
}

TEST_CASE("convexity: interior values of a multilinear polynomial stay below the vertex maximum") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_real_cube(5, 1 + t % 4, rng);
    double vmax = 0.0;
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
      Point x;
      for (int v = 0; v < 5; ++v) x.emplace_back((mask >> v) & 1 ? -1.0 : 1.0);
      vmax = std::max(vmax, std::abs(evaluate(p, x)));
    }
    for (int s = 0; s < 50; ++s) {
      Point u;
      for (int v = 0; v < 5; ++v) u.emplace_back(box(rng));
      CHECK(std::abs(evaluate_unchecked(p, u)) <= vmax * (1 + 1e-12));
    }
  }
}

TEST_CASE("lift of non-homogeneous polynomials") {
  CoefficientTable t(1, 1, Monotonicity::non_decreasing, false);
  t.set({}, 1.0);
  t.set({1}, 1.0);
  const Polynomial p(Domain::torus, t);
  const Polynomial q = lift_nonhomogeneous(p);
  CHECK(q.n() == 2);
  CHECK(q.homogeneous());
  CHECK(q.coefficients().at(std::vector<int>{2}) == Complex(1.0));
  CHECK(q.coefficients().at(std::vector<int>{1}) == Complex(1.0));
  CHECK(q.coefficients().size() == 2);

  std::mt19937_64 rng(9);
  const auto h = random_unimodular_torus(3, 2, rng);
  const auto hq = lift_nonhomogeneous(h);
  CHECK(hq.n() == 4);
  CHECK(hq.coefficients().entries() == h.coefficients().entries());

  // |Q(z, w)| = |P(z conj(w))| on the torus, coefficient count preserved.
  CoefficientTable g(3, 3, Monotonicity::non_decreasing, false);
  std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
  for (int m = 0; m <= 3; ++m)
    for_each_index(IndexSpace::full(m, 3, Monotonicity::non_decreasing),
                   [&](std::span<const int> v) { g.set({v.begin(), v.end()}, std::polar(1.0, ph(rng))); });
  const Polynomial gp(Domain::torus, g);
  const Polynomial gq = lift_nonhomogeneous(gp);
  CHECK(gq.coefficients().size() == gp.coefficients().size());
  for (int s = 0; s < 50; ++s) {
    Point zw = random_torus_point(4, rng);
    Point z(zw.begin(), zw.begin() + 3);
    for (auto& zv : z) zv *= std::conj(zw[3]);
    CHECK(std::abs(evaluate(gq, zw)) == doctest::Approx(std::abs(evaluate(gp, z))).epsilon(1e-12));
  }
}

TEST_CASE("as_torus keeps the monomials") {
  const auto c = Polynomial::all_ones(Domain::cube, 4, 2);
  const auto t = as_torus(c);
  CHECK(t.domain() == Domain::torus);
  CHECK(t.coefficients().entries() == c.coefficients().entries());
}

TEST_CASE("polynomial JSON round trip") {
  std::mt19937_64 rng(10);
  const auto p = random_unimodular_torus(3, 2, rng);
  const auto back = parse_polynomial(polynomial_to_json(p));
  CHECK(back.domain() == Domain::torus);
  for (const auto& [index, a] : p.coefficients().entries())
    CHECK(std::abs(back.coefficients().at(index) - a) < 1e-15);

  const auto s = Polynomial::from_signs(4, 2, {{{1, 2}, 1}, {{3, 4}, -1}});
  const std::string js = polynomial_to_json(s);
  CHECK(js.find("\"sign\": -1") != std::string::npos);
  CHECK(parse_polynomial(js).coefficients().entries() == s.coefficients().entries());

  const auto g = parse_polynomial(
      R"({"n":2,"d":1,"domain":"torus","coefficients":[{"index":[1],"value":[0.5,-2]}]})");
  CHECK(g.coefficients().at(std::vector<int>{1}) == Complex(0.5, -2.0));
  CHECK(g.homogeneous());
}

TEST_CASE("polynomial JSON errors") {
  try {
    parse_polynomial("{\n  \"n\": 2,\n  \"d\": 1 oops\n}");
    FAIL("expected a parse error");
  } catch (const PolyParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_polynomial(R"({"n":2,"d":1,"domain":"disk","coefficients":[]})"), PolyParseError);
  CHECK_THROWS_AS(parse_polynomial(R"({"n":2,"d":2,"domain":"cube","coefficients":[{"index":[1,1],"sign":1}]})"),
                  PolyParseError);
  CHECK_THROWS_AS(parse_polynomial(R"({"n":2,"d":1,"domain":"cube","coefficients":[{"index":[1],"sign":2}]})"),
                  PolyParseError);
  CHECK_THROWS_AS(
      parse_polynomial(R"({"n":2,"d":1,"domain":"cube","coefficients":[{"index":[1],"sign":1,"phase":0}]})"),
      PolyParseError);
  CHECK_THROWS_AS(parse_polynomial(R"({"n":2,"d":1,"domain":"cube"})"), PolyParseError);
  CHECK_THROWS_AS(
      parse_polynomial(R"({"n":2,"d":1,"domain":"cube","coefficients":[{"index":[1],"sign":1},{"index":[1],"sign":1}]})"),
      PolyParseError);
}
