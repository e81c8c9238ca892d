#include "sidonlab/indexcomb.hpp"

#include <algorithm>
#include <cmath>

namespace sidonlab {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt falling_factorial(long d, long k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative length");
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r *= d - i;
  return r;
}

double to_double(const BigInt& x) { return x.convert_to<double>(); }

double to_double(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (num == 0) return 0.0;
  const double sign = num < 0 ? -1.0 : 1.0;
  const double v = std::exp(log_of(abs(num)) - log_of(den));
  return sign * v;
}

double log_of(const BigInt& x) {
  if (x <= 0) throw std::invalid_argument("log_of: argument must be positive");
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log(x.convert_to<double>());
  const auto shift = bits - 62;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::unrestricted: return "unrestricted";
    case Monotonicity::non_decreasing: return "non-decreasing";
    case Monotonicity::strictly_increasing: return "strictly-increasing";
  }
  return "?";
}

namespace {

bool respects(std::span<const int> v, Monotonicity cls) {
  for (std::size_t s = 1; s < v.size(); ++s) {
    if (cls == Monotonicity::non_decreasing && v[s] < v[s - 1]) return false;
    if (cls == Monotonicity::strictly_increasing && v[s] <= v[s - 1]) return false;
  }
  return true;
}

void check_slots(const std::vector<int>& slots, int d) {
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (slots[s] < 1 || (d > 0 && slots[s] > d))
      throw std::invalid_argument("slot position out of range");
    if (s > 0 && slots[s] <= slots[s - 1])
      throw std::invalid_argument("slot positions must be strictly increasing");
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> slots, std::vector<int> values, int n, Monotonicity cls)
    : slots_(std::move(slots)), values_(std::move(values)), n_(n), cls_(cls) {
  if (slots_.size() != values_.size())
    throw std::invalid_argument("MultiIndex: one value per slot required");
  check_slots(slots_, 0);
  for (int v : values_)
    if (v < 1 || v > n_) throw std::invalid_argument("MultiIndex: value outside [1, n]");
  if (!respects(values_, cls_))
    throw std::invalid_argument("MultiIndex: values violate " + to_string(cls_) + " order");
}

MultiIndex MultiIndex::full(std::vector<int> values, int n, Monotonicity cls) {
  std::vector<int> slots(values.size());
  for (std::size_t s = 0; s < slots.size(); ++s) slots[s] = static_cast<int>(s) + 1;
  return MultiIndex(std::move(slots), std::move(values), n, cls);
}

int MultiIndex::at_slot(int s) const {
  auto it = std::lower_bound(slots_.begin(), slots_.end(), s);
  if (it == slots_.end() || *it != s) throw std::out_of_range("MultiIndex: slot not in domain");
  return values_[static_cast<std::size_t>(it - slots_.begin())];
}

IndexSpace::IndexSpace(int d, int n, std::vector<int> slots, Monotonicity cls)
    : d_(d), n_(n), slots_(std::move(slots)), cls_(cls) {
  if (d < 0 || n < 1) throw std::invalid_argument("IndexSpace: need d >= 0 and n >= 1");
  check_slots(slots_, d_);
  if (d_ == 0 && !slots_.empty()) throw std::invalid_argument("IndexSpace: slots outside [d]");
}

IndexSpace IndexSpace::full(int d, int n, Monotonicity cls) {
  std::vector<int> slots(static_cast<std::size_t>(std::max(d, 0)));
  for (int s = 0; s < d; ++s) slots[static_cast<std::size_t>(s)] = s + 1;
  return IndexSpace(d, n, std::move(slots), cls);
}

bool IndexSpace::contains(std::span<const int> values) const {
  if (values.size() != slots_.size()) return false;
  for (int v : values)
    if (v < 1 || v > n_) return false;
  return respects(values, cls_);
}

BigInt card_space(const IndexSpace& space) {
  const long m = static_cast<long>(space.slots().size());
  const long n = space.n();
  switch (space.monotonicity()) {
    case Monotonicity::unrestricted: return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(m));
    case Monotonicity::non_decreasing: return binomial(n + m - 1, m);
    case Monotonicity::strictly_increasing: return binomial(n, m);
  }
  return 0;
}

IndexCursor::IndexCursor(const IndexSpace& space)
    : n_(space.n()), cls_(space.monotonicity()), values_(space.slots().size()) {
  reset();
}

void IndexCursor::reset() {
  const int m = static_cast<int>(values_.size());
  done_ = false;
  for (int s = 0; s < m; ++s)
    values_[static_cast<std::size_t>(s)] = cls_ == Monotonicity::strictly_increasing ? s + 1 : 1;
  if (cls_ == Monotonicity::strictly_increasing && m > n_) done_ = true;
}

void IndexCursor::advance() {
  if (done_) return;
  const int m = static_cast<int>(values_.size());
  int p = m - 1;
  auto limit = [&](int pos) {
    return cls_ == Monotonicity::strictly_increasing ? n_ - (m - 1 - pos) : n_;
  };
  while (p >= 0 && values_[static_cast<std::size_t>(p)] >= limit(p)) --p;
  if (p < 0) {
    done_ = true;
    return;
  }
  auto& v = values_;
  ++v[static_cast<std::size_t>(p)];
  for (int q = p + 1; q < m; ++q) {
    const auto uq = static_cast<std::size_t>(q);
    switch (cls_) {
      case Monotonicity::unrestricted: v[uq] = 1; break;
      case Monotonicity::non_decreasing: v[uq] = v[uq - 1]; break;
      case Monotonicity::strictly_increasing: v[uq] = v[uq - 1] + 1; break;
    }
  }
}

void for_each_index(const IndexSpace& space, const std::function<void(std::span<const int>)>& fn) {
  for (IndexCursor c(space); !c.done(); c.advance()) fn(c.values());
}

std::vector<MultiIndex> enumerate(const IndexSpace& space, std::uint64_t cap) {
  const BigInt card = card_space(space);
  if (card > cap)
    throw CapExceeded("enumerate: space has " + card.str() + " elements", card, cap);
  std::vector<MultiIndex> out;
  out.reserve(card.convert_to<std::size_t>());
  for_each_index(space, [&](std::span<const int> v) {
    out.emplace_back(space.slots(), std::vector<int>(v.begin(), v.end()), space.n(),
                     space.monotonicity());
  });
  return out;
}

BigInt orbit_size(std::span<const int> values) {
  std::vector<int> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  BigInt r = factorial(static_cast<long>(v.size()));
  for (std::size_t s = 0; s < v.size();) {
    std::size_t t = s;
    while (t < v.size() && v[t] == v[s]) ++t;
    r /= factorial(static_cast<long>(t - s));
    s = t;
  }
  return r;
}

BigInt orbit_size(const MultiIndex& i) { return orbit_size(i.values()); }

BigInt count_nondecreasing_extensions(const MultiIndex& j, int d, int n) {
  if (!j.slots().empty() && j.slots().back() > d)
    throw std::invalid_argument("count_nondecreasing_extensions: slot outside [d]");
  BigInt count = 1;
  int prev_slot = 0;
  int prev_val = 1;
  for (std::size_t s = 0; s < j.size(); ++s) {
    const int slot = j.slots()[s];
    const int val = j.values()[s];
    if (val < prev_val || val > n) return 0;
    const long gap = slot - prev_slot - 1;
    count *= binomial(val - prev_val + gap, gap);
    prev_slot = slot;
    prev_val = val;
  }
  const long gap = d - prev_slot;
  count *= binomial(n - prev_val + gap, gap);
  return count;
}

BigInt count_nondecreasing_extensions_bruteforce(const MultiIndex& j, int d, int n,
                                                 std::uint64_t cap) {
  const auto space = IndexSpace::full(d, n, Monotonicity::non_decreasing);
  const BigInt card = card_space(space);
  if (card > cap) throw CapExceeded("extension count: too many maps on [d]", card, cap);
  BigInt count = 0;
  for_each_index(space, [&](std::span<const int> phi) {
    for (std::size_t s = 0; s < j.size(); ++s)
      if (phi[static_cast<std::size_t>(j.slots()[s] - 1)] != j.values()[s]) return;
    ++count;
  });
  return count;
}

std::vector<std::vector<int>> subsets_of_size(int d, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > d) return out;
  const auto space = IndexSpace::full(k, std::max(d, 1), Monotonicity::strictly_increasing);
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  for_each_index(space, [&](std::span<const int> v) { out.emplace_back(v.begin(), v.end()); });
  return out;
}

std::vector<int> complement(int d, const std::vector<int>& S) {
  std::vector<int> out;
  std::size_t p = 0;
  for (int s = 1; s <= d; ++s) {
    if (p < S.size() && S[p] == s) {
      ++p;
      continue;
    }
    out.push_back(s);
  }
  return out;
}

namespace {

void check_ext_args(int d, int k, int n, const std::vector<int>& S) {
  if (k < 1 || k > d || n < 1) throw std::invalid_argument("need 1 <= k <= d and n >= 1");
  if (static_cast<int>(S.size()) != d - k) throw std::invalid_argument("need |S| = d - k");
  check_slots(S, d);
}

}  // namespace

Rational mean_extension_count(int d, int k, int n, const std::vector<int>& S, std::uint64_t cap) {
  check_ext_args(d, k, n, S);
  const IndexSpace outer(d, n, complement(d, S), Monotonicity::non_decreasing);
  const BigInt js = card_space(outer);
  const BigInt work = js * binomial(n + d - 1, d);
  if (work > cap) throw CapExceeded("extension mean: enumeration too large", work, cap);
  BigInt total = 0;
  for_each_index(outer, [&](std::span<const int> v) {
    const MultiIndex j(outer.slots(), std::vector<int>(v.begin(), v.end()), n,
                       Monotonicity::non_decreasing);
    total += count_nondecreasing_extensions_bruteforce(j, d, n, cap);
  });
  return Rational(total, js);
}

ExtensionExpectation expected_extensions(int d, int k, int n, const std::vector<int>& S,
                                         std::uint64_t cap) {
  check_ext_args(d, k, n, S);
  ExtensionExpectation out{Rational(binomial(n + d - 1, d), binomial(n + k - 1, k)), std::nullopt,
                           false};
  try {
    out.brute_force = mean_extension_count(d, k, n, S, cap);
  } catch (const CapExceeded&) {
    out.cap_exceeded = true;
    return out;
  }
  if (*out.brute_force != out.closed_form)
    throw IdentityViolation("extension mean " + out.brute_force->str() +
                            " != closed form " + out.closed_form.str());
  return out;
}

StrangeCheck check_strange(int k, int d, int n) {
  if (!(1 <= k && k <= d && d <= n)) throw std::invalid_argument("need 1 <= k <= d <= n");
  StrangeCheck r;
  r.lhs_power = boost::multiprecision::pow(binomial(n + d - 1, d), static_cast<unsigned>(k));
  r.rhs_power = boost::multiprecision::pow(binomial(n + k - 1, k), static_cast<unsigned>(d));
  r.holds = r.lhs_power <= r.rhs_power;
  return r;
}

Rational win_ratio_identity(int k, int d, int n) {
  if (!(1 <= k && k <= d && d <= n)) throw std::invalid_argument("need 1 <= k <= d <= n");
  const Rational ratio(binomial(n, d), binomial(n - k, d - k) * binomial(n, k));
  const Rational expected(BigInt(1), binomial(d, k));
  if (ratio != expected)
    throw IdentityViolation("win ratio " + ratio.str() + " != " + expected.str());
  return ratio;
}

Rational shifted_binomial_ratio(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n, n >= 1");
  return Rational(binomial(n + k - 1, k), binomial(n, k));
}

CompaCheck compa_bound_check(int n, int d, int k, double promise_C) {
  if (!(1 <= k && k <= d && d <= n)) throw std::invalid_argument("compa: need 1 <= k <= d <= n");
  CompaCheck out;
  out.applicable = static_cast<double>(k) <= promise_C * std::sqrt(static_cast<double>(d)) &&
                   static_cast<long>(d) * d <= n;
  const double log_ratio = log_of(binomial(n + k - 1, k)) - log_of(binomial(n, k));
  const double log_bound = 3.0 * k * k / static_cast<double>(n);
  out.ratio = std::exp(log_ratio);
  out.bound = std::exp(log_bound);
  if (out.applicable) out.holds = log_ratio <= log_bound + 1e-12;
  return out;
}

}  // namespace sidonlab
