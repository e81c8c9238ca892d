#pragma once

// Polynomials on the torus T^n (monomials z_{i_1}...z_{i_d}, i non-decreasing)
// and on the cube {-1,1}^n (multilinear monomials x^S, S strictly increasing),
// together with their d-linear forms.

#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "sidonlab/indexcomb.hpp"

namespace sidonlab {

using Complex = std::complex<double>;
using Point = std::vector<Complex>;

enum class Domain { torus, cube };

std::string to_string(Domain d);

/// Coefficients keyed by sorted multi-indices. Keys of a homogeneous table
/// all have length d; a non-homogeneous table admits any length 0..d.
class CoefficientTable {
 public:
  CoefficientTable(int n, int d, Monotonicity cls, bool homogeneous = true);

  void set(std::vector<int> index, Complex value);
  /// Zero when the index carries no coefficient.
  Complex at(std::span<const int> index) const;

  int n() const { return n_; }
  int d() const { return d_; }
  Monotonicity monotonicity() const { return cls_; }
  bool homogeneous() const { return homogeneous_; }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::vector<int>, Complex>& entries() const { return entries_; }

  bool is_unimodular(double tol = 1e-12) const;

 private:
  int n_;
  int d_;
  Monotonicity cls_;
  bool homogeneous_;
  std::map<std::vector<int>, Complex> entries_;
};

struct Term {
  std::vector<int> index;
  Complex coeff;
};

class Polynomial {
 public:
  Polynomial(Domain domain, CoefficientTable table);

  /// Unimodular torus polynomial with coefficients e^{i phase}.
  static Polynomial from_phases(int n, int d,
                                const std::vector<std::pair<std::vector<int>, double>>& terms,
                                bool homogeneous = true);
  /// Cube polynomial with coefficients +-1.
  static Polynomial from_signs(int n, int d,
                               const std::vector<std::pair<std::vector<int>, int>>& terms,
                               bool homogeneous = true);
  /// Every index of the space gets coefficient 1.
  static Polynomial all_ones(Domain domain, int n, int d);

  Domain domain() const { return domain_; }
  int n() const { return table_.n(); }
  int d() const { return table_.d(); }
  bool homogeneous() const { return table_.homogeneous(); }
  bool is_unimodular() const { return table_.is_unimodular(); }
  const CoefficientTable& coefficients() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  Domain domain_;
  CoefficientTable table_;
  std::vector<Term> terms_;
};

/// Sum of a_i prod_s z_{i(s)}. Torus points must be unimodular (1e-9), cube
/// points exactly +-1.
Complex evaluate(const Polynomial& p, std::span<const Complex> point);
/// Same sum at an arbitrary point of C^n.
Complex evaluate_unchecked(const Polynomial& p, std::span<const Complex> point);

Point point_from_signs(std::span<const int> signs);
Point point_from_phases(std::span<const double> phases);

/// The symmetric d-linear form with diagonal P: b_j = a_{r(j)} / |[r(j)]|,
/// r the sorted rearrangement. Never materialized over M(d,n).
class SymmetricForm {
 public:
  explicit SymmetricForm(const Polynomial& base);

  const Polynomial& base() const { return base_; }
  Complex coefficient(std::span<const int> j) const;
  /// B(points[0], ..., points[d-1]) summed over the orbits of the support.
  Complex value(const std::vector<Point>& points, std::uint64_t cap = kDefaultEnumerationCap) const;

 private:
  Polynomial base_;
};

enum class ExtensionRule { flat, hat, c };

/// Extensions of a coefficient function on J(d,n) to pairs (i on S, j on
/// S-complement). `flat` keeps a_{sort(i+j)} when i+j is injective, `hat`
/// sorts each block first, `c` is `hat` divided by d!.
class ExtendedCoefficient {
 public:
  ExtendedCoefficient(ExtensionRule rule, const CoefficientTable& source);
  Complex operator()(const MultiIndex& i, const MultiIndex& j) const;
  ExtensionRule rule() const { return rule_; }

 private:
  ExtensionRule rule_;
  CoefficientTable source_;
};

/// L(x,...,x,y,...,y) with x in k slots and y in d-k slots, L the symmetric
/// multilinear form of a homogeneous cube polynomial with real coefficients.
double mixed_form(const Polynomial& p, std::span<const double> x, std::span<const double> y,
                  int k);

struct PolarizationCoefficient {
  double extracted;  // t^k coefficient of p(t) = P(k t x + (d-k) y)
  double predicted;  // k^k (d-k)^{d-k} C(d,k) L_k(x,y)
  bool agrees;       // relative 1e-9
};

PolarizationCoefficient polarization_coefficient(const Polynomial& p, std::span<const double> x,
                                                 std::span<const double> y, int k);

/// The same monomials read as a polynomial on the torus (a multilinear
/// cube polynomial embeds in T^n).
Polynomial as_torus(const Polynomial& p);

/// Q(z, w) = sum c_a z^a w^{d-|a|}: a homogeneous polynomial in n+1 variables,
/// w being variable n+1.
Polynomial lift_nonhomogeneous(const Polynomial& p);

}  // namespace sidonlab
