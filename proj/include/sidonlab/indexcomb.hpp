#pragma once

// Exact combinatorics over index families [d] -> [n]: unrestricted maps,
// non-decreasing maps and strictly increasing maps, optionally restricted to
// a subset of slots. All index values and slot positions are 1-based.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sidonlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Thrown when an enumeration-backed computation would visit more elements
/// than the configured cap. Carries the exact size of the refused work.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, BigInt required, std::uint64_t cap)
      : std::runtime_error(what), required_(std::move(required)), cap_(cap) {}
  const BigInt& required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  BigInt required_;
  std::uint64_t cap_;
};

/// Thrown when an exact identity that must hold by construction fails.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigInt binomial(long n, long k);
BigInt factorial(long n);
/// d (d-1) ... (d-k+1); 1 for k = 0.
BigInt falling_factorial(long d, long k);

double to_double(const BigInt& x);
double to_double(const Rational& x);
/// Natural logarithm of a positive integer of any size.
double log_of(const BigInt& x);

enum class Monotonicity { unrestricted, non_decreasing, strictly_increasing };

std::string to_string(Monotonicity m);

/// A map from an ordered slot set S = {s_1 < ... < s_m} into [n].
class MultiIndex {
 public:
  MultiIndex(std::vector<int> slots, std::vector<int> values, int n, Monotonicity cls);
  /// Convenience: slots 1..values.size().
  static MultiIndex full(std::vector<int> values, int n, Monotonicity cls);

  const std::vector<int>& slots() const { return slots_; }
  const std::vector<int>& values() const { return values_; }
  int n() const { return n_; }
  Monotonicity monotonicity() const { return cls_; }
  std::size_t size() const { return values_.size(); }

  /// Value at slot position s (1-based), throws if s is not a slot.
  int at_slot(int s) const;

  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<int> slots_;
  std::vector<int> values_;
  int n_;
  Monotonicity cls_;
};

/// The family of maps S -> [n] of a monotonicity class, S a subset of [d].
class IndexSpace {
 public:
  IndexSpace(int d, int n, std::vector<int> slots, Monotonicity cls);
  /// S = [d].
  static IndexSpace full(int d, int n, Monotonicity cls);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::vector<int>& slots() const { return slots_; }
  Monotonicity monotonicity() const { return cls_; }

  bool contains(std::span<const int> values) const;

 private:
  int d_;
  int n_;
  std::vector<int> slots_;
  Monotonicity cls_;
};

BigInt card_space(const IndexSpace& space);

/// Lexicographic cursor over the value tuples of a space. Restartable and
/// independent of other cursors over the same space.
class IndexCursor {
 public:
  explicit IndexCursor(const IndexSpace& space);
  bool done() const { return done_; }
  const std::vector<int>& values() const { return values_; }
  void advance();
  void reset();

 private:
  int n_;
  Monotonicity cls_;
  std::vector<int> values_;
  bool done_ = false;
};

/// Visits every value tuple of `space` in lexicographic order.
void for_each_index(const IndexSpace& space, const std::function<void(std::span<const int>)>& fn);

std::vector<MultiIndex> enumerate(const IndexSpace& space,
                                  std::uint64_t cap = kDefaultEnumerationCap);

/// d! / prod_k (multiplicity of k)!
BigInt orbit_size(std::span<const int> values);
BigInt orbit_size(const MultiIndex& i);

/// Number of non-decreasing Phi: [d] -> [n] with Phi restricted to j's slots
/// equal to j. Per-gap stars-and-bars product.
BigInt count_nondecreasing_extensions(const MultiIndex& j, int d, int n);
/// Same count by enumerating every non-decreasing map on [d].
BigInt count_nondecreasing_extensions_bruteforce(const MultiIndex& j, int d, int n,
                                                 std::uint64_t cap = kDefaultEnumerationCap);

struct ExtensionExpectation {
  Rational closed_form;                 // C(n+d-1,d) / C(n+k-1,k)
  std::optional<Rational> brute_force;  // mean over j of the extension count
  bool cap_exceeded = false;
};

/// Expected number of non-decreasing extensions of a uniformly random
/// non-decreasing j on the complement of S (|S| = d - k). Throws
/// IdentityViolation if the enumerated mean disagrees with the closed form.
ExtensionExpectation expected_extensions(int d, int k, int n, const std::vector<int>& S,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// Enumerated mean only (no closed form), used as the independent side.
Rational mean_extension_count(int d, int k, int n, const std::vector<int>& S,
                              std::uint64_t cap = kDefaultEnumerationCap);

struct StrangeCheck {
  bool holds;
  BigInt lhs_power;  // C(n+d-1,d)^k
  BigInt rhs_power;  // C(n+k-1,k)^d
};

/// C(n+d-1,d)^{1/d} <= C(n+k-1,k)^{1/k}, decided as integer powers.
StrangeCheck check_strange(int k, int d, int n);

/// C(n,d) / (C(n-k,d-k) C(n,k)); throws IdentityViolation unless it equals
/// 1 / C(d,k).
Rational win_ratio_identity(int k, int d, int n);

/// C(n+k-1,k) / C(n,k) as an exact rational.
Rational shifted_binomial_ratio(int n, int k);

struct CompaCheck {
  bool applicable = false;  // k <= C sqrt(d) and d^2 <= n
  bool holds = true;        // ratio <= bound (vacuous when not applicable)
  double ratio = 0.0;       // C(n+k-1,k) / C(n,k)
  double bound = 0.0;       // e^{3k^2/n}
};

/// C(n+k-1,k)/C(n,k) <= e^{3k^2/n} under the promise k <= C sqrt(d), d^2 <= n.
/// Compared in log space.
CompaCheck compa_bound_check(int n, int d, int k, double promise_C);

/// All k-subsets of [d] in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int d, int k);
/// [d] \ S for sorted S.
std::vector<int> complement(int d, const std::vector<int>& S);

}  // namespace sidonlab
