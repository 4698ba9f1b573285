// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check.
#ifndef HILLPOLY_TESTS_ORACLES_HPP
#define HILLPOLY_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hillpoly/poly.hpp"

namespace oracle {

using hillpoly::Integer;
using hillpoly::Poly;
using hillpoly::Rational;

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Schoolbook product straight from coefficient vectors.
inline std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// Horner evaluation on a raw coefficient vector.
inline Rational eval(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// ∏ (x - r_i) as a coefficient vector.
inline std::vector<Rational> from_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> c{1};
  for (const auto& r : roots) c = convolve(c, {-r, 1});
  return c;
}

/// Numerator of Σ Q(n) tⁿ times (1-t)^{d+1}, truncated to degree d, by
/// evaluating Q at 0..d and convolving with binomials directly.
inline std::vector<Rational> euler_numerator(const std::vector<Rational>& qc) {
  const int d = static_cast<int>(qc.size()) - 1;
  std::vector<Rational> p(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    for (int j = 0; j <= k; ++j) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d + 1), static_cast<unsigned long>(j));
      const Rational term = Rational(b) * eval(qc, Rational(k - j));
      p[static_cast<std::size_t>(k)] += (j % 2 == 0) ? term : Rational(-term);
    }
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

/// A(n, k) = Σ_j (-1)^j C(n+1, j) (k+1-j)^n.
inline Integer eulerian_number(int n, int k) {
  Integer total = 0;
  for (int j = 0; j <= k + 1; ++j) {
    Integer b, p;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(j));
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k + 1 - j), static_cast<unsigned long>(n));
    total += (j % 2 == 0 ? 1 : -1) * b * p;
  }
  return total;
}

/// Every palindromic sequence of positive integers, weakly increasing to the
/// middle, with sum <= v_max; found by brute force over compositions.
inline std::vector<std::vector<int>> brute_force_hills(int v_max) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto accept = [](const std::vector<int>& s) {
    const std::size_t l = s.size();
    for (std::size_t i = 0; i < l; ++i)
      if (s[i] != s[l - 1 - i]) return false;
    for (std::size_t i = 1; i < (l + 1) / 2; ++i)
      if (s[i - 1] > s[i]) return false;
    return true;
  };
  auto rec = [&](auto&& self, int left) -> void {
    if (!cur.empty() && accept(cur)) out.push_back(cur);
    for (int x = 1; x <= left; ++x) {
      cur.push_back(x);
      self(self, left - x);
      cur.pop_back();
    }
  };
  rec(rec, v_max);
  return out;
}

/// Number of semistandard tableaux of the 2 x n rectangle with entries in
/// 1..k, by the hook-content formula.
inline Integer ssyt_two_row_rectangle(int n, int k) {
  Rational num = 1;
  Rational den = 1;
  for (int row = 0; row < 2; ++row)
    for (int col = 0; col < n; ++col) {
      num *= k + col - row;
      den *= (n - col - 1) + (1 - row) + 1;
    }
  const Rational v = num / den;
  return v.get_num();
}

/// Jacobi polynomial from the three-term recurrence in n.
inline std::vector<Rational> jacobi_recurrence(int n, const Rational& a, const Rational& b) {
  std::vector<Rational> p0{1};
  if (n == 0) return p0;
  std::vector<Rational> p1{(a - b) / 2, (a + b + 2) / 2};
  for (int k = 2; k <= n; ++k) {
    const Rational s = 2 * k + a + b;
    const Rational c1 = 2 * k * (k + a + b) * (s - 2);
    const Rational c2 = (s - 1) * (a * a - b * b);
    const Rational c3 = (s - 1) * s * (s - 2);
    const Rational c4 = 2 * (k + a - 1) * (k + b - 1) * s;
    auto xp1 = convolve({0, 1}, p1);
    std::vector<Rational> next(std::max(xp1.size(), p0.size()));
    for (std::size_t i = 0; i < next.size(); ++i) {
      const Rational lin = (i < p1.size() ? c2 * p1[i] : Rational(0)) + (i < xp1.size() ? c3 * xp1[i] : Rational(0));
      next[i] = (lin - (i < p0.size() ? c4 * p0[i] : Rational(0))) / c1;
    }
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

/// Seeded generator of small rationals and polynomials.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int bound = 9, int max_den = 5) { return q(integer(-bound, bound), integer(1, max_den)); }

  std::vector<Rational> coeffs(int max_degree, int bound = 9) {
    const int d = integer(0, max_degree);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(rational(bound));
    while (c.back() == 0) c.back() = rational(bound);
    return c;
  }

  Poly poly(int max_degree, int bound = 9) { return Poly(coeffs(max_degree, bound)); }

  /// Distinct rationals.
  std::vector<Rational> distinct(int count, int bound = 12, int max_den = 4) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
      const Rational r = rational(bound, max_den);
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // HILLPOLY_TESTS_ORACLES_HPP
