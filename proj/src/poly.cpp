#include "hillpoly/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hillpoly {

int Degree::value() const {
  if (!finite_) throw std::domain_error("degree of the zero polynomial");
  return value_;
}

Poly::Poly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("negative monomial exponent");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Rational& root) { return Poly{Rational(-root), 1}; }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree Poly::degree() const {
  if (coeffs_.empty()) return Degree::minus_infinity();
  return Degree(static_cast<int>(coeffs_.size()) - 1);
}

Rational Poly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("polynomial divided by zero scalar");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  const int db = b.deg();
  const int dq = a.deg() - db;
  std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1);
  const Rational lead = b.leading();
  for (int k = dq; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return p * scale;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = primitive_part(a);
  Poly y = primitive_part(b);
  while (!y.is_zero()) {
    Poly r = primitive_part(divrem(x, y).second);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly derivative(const Poly& p, int order) {
  Poly r = p;
  for (int o = 0; o < order && !r.is_zero(); ++o) {
    std::vector<Rational> out;
    for (std::size_t k = 1; k < r.size(); ++k) out.push_back(r.coeffs()[k] * static_cast<long>(k));
    r = Poly(std::move(out));
  }
  return r;
}

Poly pow(const Poly& p, unsigned n) {
  Poly result = Poly(Rational(1));
  Poly base = p;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + Poly(*it);
  return acc;
}

Poly shift(const Poly& p, const Rational& a) {
  // Taylor shift by repeated synthetic division: O(n^2) rational ops.
  std::vector<Rational> c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  return Poly(std::move(c));
}

Poly forward_diff(const Poly& p, int n) {
  Poly r = p;
  for (int i = 0; i < n && !r.is_zero(); ++i) r = shift(r, 1) - r;
  return r;
}

Poly backward_diff(const Poly& p, int n) {
  Poly r = p;
  for (int i = 0; i < n && !r.is_zero(); ++i) r = r - shift(r, -1);
  return r;
}

Poly reverse(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("reverse of the zero polynomial");
  std::vector<Rational> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return Poly(std::move(c));
}

Poly moebius_substitute(const Poly& p, const Rational& a, const Rational& b,
                        const Rational& c, const Rational& d) {
  if (a * d == b * c) throw std::domain_error("degenerate Moebius map (ad = bc)");
  if (p.is_zero()) return p;
  const int n = p.deg();
  const Poly num{b, a};
  const Poly den{d, c};
  std::vector<Poly> num_pow{Poly(Rational(1))};
  std::vector<Poly> den_pow{Poly(Rational(1))};
  for (int k = 1; k <= n; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  Poly out;
  for (int k = 0; k <= n; ++k) {
    const Rational& ck = p.coeffs()[static_cast<std::size_t>(k)];
    if (ck == 0) continue;
    out += ck * (num_pow[static_cast<std::size_t>(k)] * den_pow[static_cast<std::size_t>(n - k)]);
  }
  return out;
}

Poly rising_basis(int a) {
  Poly r(Rational(1));
  for (int i = 1; i <= a; ++i) r *= Poly{Rational(i), 1};
  return r;
}

std::vector<Rational> discrete_taylor_at_minus_one(const Poly& p) {
  std::vector<Rational> out;
  if (p.is_zero()) return out;
  Poly current = p;
  for (int a = 0; a <= p.deg(); ++a) {
    Rational c = current(Rational(-1)) / Rational(factorial(static_cast<unsigned long>(a)));
    out.push_back(c);
    current = backward_diff(current);
  }
  return out;
}

int discrete_order_at_minus_one(const Poly& p) {
  const auto c = discrete_taylor_at_minus_one(p);
  for (std::size_t a = 0; a < c.size(); ++a)
    if (c[a] != 0) return static_cast<int>(a);
  return -1;
}

Poly from_discrete_taylor(std::span<const Rational> coeffs) {
  Poly out;
  Poly basis(Rational(1));
  for (std::size_t a = 0; a < coeffs.size(); ++a) {
    if (a > 0) basis *= Poly{Rational(static_cast<long>(a)), 1};
    out += coeffs[a] * basis;
  }
  return out;
}

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences
  std::vector<Rational> dd(ys.begin(), ys.end());
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational span = xs[i] - xs[i - level];
      if (span == 0) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  Poly out;
  for (std::size_t i = n; i-- > 0;) out = out * Poly{Rational(-xs[i]), 1} + Poly(dd[i]);
  return out;
}

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) {
      if (is_integer(mag)) os << to_string(mag);
      else os << "(" << to_string(mag) << ")";
    }
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace hillpoly
