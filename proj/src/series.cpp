#include "hillpoly/series.hpp"

#include <stdexcept>

namespace hillpoly {

Poly truncate(const Poly& p, int order) {
  if (order < 0) return {};
  std::vector<Rational> c = p.coeffs();
  if (c.size() > static_cast<std::size_t>(order) + 1) c.resize(static_cast<std::size_t>(order) + 1);
  return Poly(std::move(c));
}

Poly series_mul(const Poly& a, const Poly& b, int order) {
  if (order < 0 || a.is_zero() || b.is_zero()) return {};
  const auto na = std::min<std::size_t>(a.size(), static_cast<std::size_t>(order) + 1);
  const auto nb = std::min<std::size_t>(b.size(), static_cast<std::size_t>(order) + 1);
  std::vector<Rational> out(std::min(na + nb - 1, static_cast<std::size_t>(order) + 1));
  for (std::size_t i = 0; i < na; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < nb && i + j < out.size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return Poly(std::move(out));
}

Poly series_one_minus_t_inverse_power(int k, int order) {
  if (k < 0) throw std::invalid_argument("negative power");
  if (k == 0) return Poly(Rational(1));
  std::vector<Rational> c;
  for (int n = 0; n <= order; ++n)
    c.emplace_back(binomial(static_cast<unsigned long>(n + k - 1), static_cast<unsigned long>(k - 1)));
  return Poly(std::move(c));
}

Poly one_minus_t_power(int k) { return pow(Poly{1, -1}, static_cast<unsigned>(k)); }

Poly value_series(const Poly& q, int order) {
  std::vector<Rational> c;
  for (int n = 0; n <= order; ++n) c.push_back(q(Rational(n)));
  return Poly(std::move(c));
}

Poly theta(const Poly& series) { return Poly::x() * derivative(series); }

}  // namespace hillpoly
