#ifndef HILLPOLY_POLY_HPP
#define HILLPOLY_POLY_HPP

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hillpoly/rational.hpp"

namespace hillpoly {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which compares below every finite degree and absorbs addition.
class Degree {
 public:
  constexpr Degree() = default;  // minus infinity
  constexpr explicit Degree(int value) : value_(value), finite_(true) {}

  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_finite() const { return finite_; }
  /// Throws std::domain_error for minus infinity.
  int value() const;

  friend constexpr bool operator==(const Degree& a, const Degree& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Degree operator+(const Degree& a, const Degree& b) {
    if (!a.finite_ || !b.finite_) return Degree();
    return Degree(a.value_ + b.value_);
  }

 private:
  int value_ = 0;
  bool finite_ = false;
};

/// Dense univariate polynomial over the rationals. Coefficients are stored in
/// ascending order with no trailing zeros; the empty sequence is zero.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT: implicit scalar embedding
  Poly(int constant) : Poly(Rational(constant)) {}  // NOLINT
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  /// The monomial c x^k.
  static Poly monomial(const Rational& c, int k);
  /// x - root.
  static Poly linear_root(const Rational& root);
  static Poly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Degree degree() const;
  /// Degree of a nonzero polynomial; throws std::domain_error for zero.
  int deg() const { return degree().value(); }

  /// Coefficient of x^k, zero outside the stored range.
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly& operator/=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
  friend Poly operator*(Poly a, int c) { return a *= Rational(c); }
  friend Poly operator*(int c, Poly a) { return a *= Rational(c); }
  friend Poly operator/(Poly a, int c) { return a /= Rational(c); }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder with deg remainder < deg divisor.
/// Throws std::domain_error when the divisor is zero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/// Exact quotient; throws std::domain_error if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

Poly monic(const Poly& p);

/// Positive rational multiple of p with coprime integer coefficients.
/// Signs of all values are preserved.
Poly primitive_part(const Poly& p);

Poly derivative(const Poly& p, int order = 1);
Poly pow(const Poly& p, unsigned n);

/// p(q(x)).
Poly compose(const Poly& p, const Poly& q);

/// q(x) = p(x + a).
Poly shift(const Poly& p, const Rational& a);

/// Δⁿp, with Δf(x) = f(x+1) - f(x).
Poly forward_diff(const Poly& p, int n = 1);
/// ∇ⁿp, with ∇f(x) = f(x) - f(x-1).
Poly backward_diff(const Poly& p, int n = 1);

/// x^{deg p} p(1/x). Throws std::domain_error for zero.
Poly reverse(const Poly& p);

/// (c x + d)^{deg p} p((a x + b)/(c x + d)). Throws std::domain_error when
/// ad = bc.
Poly moebius_substitute(const Poly& p, const Rational& a, const Rational& b,
                        const Rational& c, const Rational& d);

/// h_a(s) = (s+1)(s+2)...(s+a); h_0 = 1.
Poly rising_basis(int a);

/// Coefficients c_a = ∇ᵃp(-1)/a! with p = Σ c_a h_a(s).
std::vector<Rational> discrete_taylor_at_minus_one(const Poly& p);

/// min{a : c_a != 0} of the discrete Taylor expansion at -1; for zero
/// returns -1.
int discrete_order_at_minus_one(const Poly& p);

/// Σ c_a h_a(s).
Poly from_discrete_taylor(std::span<const Rational> coeffs);

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
/// Throws std::invalid_argument for repeated nodes or mismatched sizes.
Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Human readable form in ascending degree, e.g. "1 + 6t + 6t^2 + t^3".
std::string to_string(const Poly& p, char var = 'x');

}  // namespace hillpoly

#endif  // HILLPOLY_POLY_HPP
