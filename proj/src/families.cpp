#include "hillpoly/families.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "hillpoly/euler.hpp"

namespace hillpoly {

namespace {

std::optional<long> nonpositive_integer(const Rational& a) {
  if (is_integer(a) && a <= 0) return to_long(-a);
  return std::nullopt;
}

long termination_index(std::span<const Poly> upper) {
  std::optional<long> k;
  for (const auto& a : upper) {
    if (!a.is_constant()) continue;
    if (auto j = nonpositive_integer(a.coeff(0)); j && (!k || *j < *k)) k = j;
  }
  if (!k) throw std::invalid_argument("hypergeometric series does not terminate");
  return *k;
}

void check_lower_poles(std::span<const Rational> lower, long terms) {
  for (const auto& b : lower)
    if (auto j = nonpositive_integer(b); j && *j < terms)
      throw std::domain_error("hypergeometric lower parameter " + to_string(b) + " has a pole before termination");
}

Rational two_power(int n) {
  Integer p = 1;
  p <<= static_cast<mp_bitcnt_t>(n);
  return Rational(p);
}

}  // namespace

Poly hypergeometric_terminating(std::span<const Poly> upper, std::span<const Rational> lower, const Poly& x) {
  const long k_max = termination_index(upper);
  check_lower_poles(lower, k_max);
  Poly term(Rational(1));
  Poly sum = term;
  for (long n = 1; n <= k_max; ++n) {
    Poly factor = x;
    for (const auto& a : upper) factor *= a + Poly(Rational(n - 1));
    Rational den = n;
    for (const auto& b : lower) den *= b + (n - 1);
    term = term * factor / den;
    sum += term;
  }
  return sum;
}

Rational hypergeometric_terminating(std::span<const Rational> upper, std::span<const Rational> lower,
                                    const Rational& x) {
  std::vector<Poly> up(upper.begin(), upper.end());
  const Poly result = hypergeometric_terminating(up, lower, Poly(x));
  return result.coeff(0);
}

Poly jacobi(int n, const Rational& alpha, const Rational& beta) {
  if (n < 0) throw std::invalid_argument("jacobi: negative degree");
  const Poly xm{-1, 1};
  const Poly xp{1, 1};
  Poly sum;
  const auto un = static_cast<unsigned long>(n);
  for (int k = 0; k <= n; ++k) {
    const auto uk = static_cast<unsigned long>(k);
    const Rational c = binomial(Rational(n + alpha), uk) * binomial(Rational(n + beta), un - uk);
    if (c == 0) continue;
    sum += c * (pow(xm, static_cast<unsigned>(n - k)) * pow(xp, static_cast<unsigned>(k)));
  }
  return sum / two_power(n);
}

Poly jacobi_hypergeometric(int n, const Rational& alpha, const Rational& beta) {
  if (n < 0) throw std::invalid_argument("jacobi: negative degree");
  const std::vector<Poly> upper{Poly(Rational(-n)), Poly(Rational(n + alpha + beta + 1))};
  const std::vector<Rational> lower{Rational(alpha + 1)};
  const Poly arg{Rational(1, 2), Rational(-1, 2)};
  return binomial(Rational(n + alpha), static_cast<unsigned long>(n)) *
         hypergeometric_terminating(upper, lower, arg);
}

Poly gegenbauer(int n, const Rational& lambda) {
  const Rational a = lambda - Rational(1, 2);
  return jacobi(n, a, a);
}

Rational HahnScheme::lambda(int n) const {
  const Rational tau1 = tau.coeff(1);
  const Rational sigma2 = 2 * sigma.coeff(2);
  return -n * tau1 - Rational(n) * (n - 1) / 2 * sigma2;
}

Rational HahnScheme::normalizer(int n) const {
  Rational b = Rational(factorial(static_cast<unsigned long>(n)));
  b = 1 / b;
  return n % 2 == 0 ? b : Rational(-b);
}

HahnScheme hahn_scheme(const Rational& alpha, const Rational& beta, const Rational& n_param) {
  HahnScheme s;
  s.alpha = alpha;
  s.beta = beta;
  s.n_param = n_param;
  s.sigma = Poly{0, Rational(n_param + alpha), -1};
  s.tau = Poly{Rational((n_param - 1) * (beta + 1)), Rational(-(2 + alpha + beta))};
  return s;
}

RationalFunction rho_ratio(int j, const Rational& alpha, const Rational& beta, const Rational& n_param) {
  if (j < 0) throw std::invalid_argument("rho_ratio: negative shift");
  RationalFunction r{Poly(Rational(1)), Poly(Rational(1))};
  for (int i = 0; i < j; ++i) {
    // Γ shift of each factor at x+i
    r.num *= Poly{Rational(i + beta + 1), 1} * Poly{Rational(n_param - 1 - i), -1};
    r.den *= Poly{Rational(i + 1), 1} * Poly{Rational(n_param + alpha - 1 - i), -1};
  }
  return r;
}

Poly hahn_explicit(int m, const Rational& alpha, const Rational& beta, const Rational& n_param) {
  if (m < 0) throw std::invalid_argument("hahn: negative degree");
  const auto um = static_cast<unsigned long>(m);
  Poly sum;
  Poly rising_minus_n(Rational(1));  // (-n)_k
  for (int k = 0; k <= m; ++k) {
    const auto uk = static_cast<unsigned long>(k);
    if (k > 0) rising_minus_n *= Poly{Rational(k - 1), -1};
    Rational c = rising(Rational(-m), uk) * rising(Rational(alpha + beta + m + 1), uk) /
                 Rational(factorial(uk));
    c *= rising(Rational(beta + k + 1), um - uk);
    for (int i = k + 1; i <= m; ++i) c *= n_param - i;
    if ((m + k) % 2 != 0) c = -c;
    sum += c * rising_minus_n;
  }
  return sum / Rational(factorial(um));
}

Poly hahn_explicit_3f2(int m, const Rational& alpha, const Rational& beta, const Rational& n_param) {
  if (m < 0) throw std::invalid_argument("hahn: negative degree");
  const std::vector<Poly> upper{Poly(Rational(-m)), Poly(Rational(alpha + beta + m + 1)), Poly{0, -1}};
  const std::vector<Rational> lower{Rational(beta + 1), Rational(1 - n_param)};
  const Poly series = hypergeometric_terminating(upper, lower, Poly(Rational(1)));
  const auto um = static_cast<unsigned long>(m);
  Rational pref = rising(Rational(beta + 1), um) / Rational(factorial(um));
  for (int i = 1; i <= m; ++i) pref *= n_param - i;  // (N-1)!/(N-m-1)!
  if (m % 2 != 0) pref = -pref;
  return pref * series;
}

Poly hahn_rodrigues(int m, const Rational& alpha, const Rational& beta, const Rational& n_param) {
  if (m < 0) throw std::invalid_argument("hahn: negative degree");
  const HahnScheme scheme = hahn_scheme(alpha, beta, n_param);
  Poly weight_product(Rational(1));  // ∏_{k<m} σ(x-k)
  for (int k = 0; k < m; ++k) weight_product *= shift(scheme.sigma, Rational(-k));
  const RationalFunction full = rho_ratio(m, alpha, beta, n_param);
  Poly numerator;
  for (int k = 0; k <= m; ++k) {
    const RationalFunction rk = rho_ratio(k, alpha, beta, n_param);
    // den_m / den_k = ∏_{k <= i < m} of the denominator factors
    Poly cofactor(Rational(1));
    for (int i = k; i < m; ++i)
      cofactor *= Poly{Rational(i + 1), 1} * Poly{Rational(n_param + alpha - 1 - i), -1};
    Rational c(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k)));
    if ((m - k) % 2 != 0) c = -c;
    numerator += c * (rk.num * cofactor * shift(weight_product, Rational(k)));
  }
  auto [quot, rem] = divrem(numerator, full.den);
  if (!rem.is_zero())
    throw std::domain_error("hahn_rodrigues: weight ratios do not cancel for these parameters");
  return scheme.normalizer(m) * quot;
}

Rational hahn_weight(int n, int alpha, int beta, int n_param) {
  if (n_param <= 0 || alpha < 0 || beta < 0 || n < 0 || n >= n_param)
    throw std::invalid_argument("hahn_weight: requires 0 <= n < N, N >= 1, alpha, beta >= 0");
  auto f = [](int k) { return Rational(factorial(static_cast<unsigned long>(k))); };
  return f(n_param + alpha - n - 1) * f(n + beta) / (f(n) * f(n_param - n - 1));
}

Poly f_poly(int m) {
  if (m < 0) throw std::invalid_argument("f_poly: negative index");
  std::vector<Rational> c;
  const auto um = static_cast<unsigned long>(m);
  for (unsigned long k = 0; k <= um; ++k)
    c.emplace_back(Rational(binomial(um, um - k) * binomial(2 * um + 2 - k, um + 1 - k)) / (m + 2));
  return Poly(std::move(c));
}

Poly f_tilde_poly(int m) {
  if (m < 0) throw std::invalid_argument("f_tilde_poly: negative index");
  std::vector<Rational> c;
  const auto um = static_cast<unsigned long>(m);
  for (unsigned long k = 0; k <= um; ++k)
    c.emplace_back(Rational(binomial(um, k) * binomial(um + 2 + k, 1 + k)) / (m + 2));
  return Poly(std::move(c));
}

Poly g_poly(int m) {
  if (m < 0) throw std::invalid_argument("g_poly: negative index");
  std::vector<Rational> c;
  const auto um = static_cast<unsigned long>(m);
  for (unsigned long j = 0; j <= um; ++j)
    c.emplace_back(Rational(binomial(um + 1, j + 1) * binomial(um + 1, j)) / (m + 1));
  return Poly(std::move(c));
}

Poly h_poly(int m) {
  if (m < -1) throw std::invalid_argument("h_poly: index below -1");
  if (m == -1) return Poly(Rational(1));
  Poly num = Poly{1, 1} * Poly{Rational(m + 2), 1};
  Integer den = m + 2;
  for (int i = 2; i <= m + 1; ++i) {
    num *= pow(Poly{Rational(i), 1}, 2);
    den *= i * i;
  }
  return num / Rational(den);
}

Poly q_poly_via_nabla(int m) { return backward_diff(h_poly(m), m + 2); }

Poly q_poly_via_inverse_euler(int m) { return inverse_euler(g_poly(m)); }

Poly q_poly(int m) {
  Poly a = q_poly_via_nabla(m);
  if (a != q_poly_via_inverse_euler(m)) throw std::logic_error("q_poly: nabla and inverse-Euler routes differ");
  return a;
}

std::vector<Integer> eulerian_triangle_row(int n) {
  if (n < 1) throw std::invalid_argument("eulerian_triangle_row: n >= 1");
  std::vector<Integer> row{1};
  for (int r = 2; r <= n; ++r) {
    std::vector<Integer> next(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
      Integer v = 0;
      if (j < r - 1) v += (j + 1) * row[static_cast<std::size_t>(j)];
      if (j > 0) v += (r - j) * row[static_cast<std::size_t>(j - 1)];
      next[static_cast<std::size_t>(j)] = v;
    }
    row = std::move(next);
  }
  return row;
}

EulerianMember eulerian_family(int k) {
  if (k < 0) throw std::invalid_argument("eulerian_family: negative index");
  const auto e = static_cast<unsigned>(k + 1);
  EulerianMember member;
  member.q = pow(Poly{1, 1}, e) - pow(Poly::x(), e);
  member.p = euler_transform(member.q).p;
  const auto row = eulerian_triangle_row(k + 1);
  std::vector<Rational> expected(row.begin(), row.end());
  if (member.p != Poly(expected)) throw std::logic_error("eulerian_family: triangle row mismatch");
  return member;
}

}  // namespace hillpoly
