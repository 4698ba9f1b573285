#include "hillpoly/bivariate.hpp"

#include <algorithm>
#include <stdexcept>

#include "hillpoly/families.hpp"

namespace hillpoly {

BivariateSeries::BivariateSeries(std::vector<Poly> coeffs, int order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

const Poly& BivariateSeries::coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

void BivariateSeries::set_coeff(int k, Poly p) { coeffs_.at(static_cast<std::size_t>(k)) = std::move(p); }

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  const int order = std::min(a.order(), b.order());
  BivariateSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= order; ++j)
      if (!b.coeff(j).is_zero()) out.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return out;
}

BivariateSeries operator*(const Poly& c, BivariateSeries a) {
  for (auto& p : a.coeffs_) p = c * p;
  return a;
}

BivariateSeries BivariateSeries::dx() const {
  BivariateSeries out(order());
  for (int k = 0; k <= order(); ++k) out.coeffs_[static_cast<std::size_t>(k)] = derivative(coeff(k));
  return out;
}

BivariateSeries BivariateSeries::dy() const {
  BivariateSeries out(std::max(order() - 1, 0));
  for (int k = 1; k <= order(); ++k) out.coeffs_[static_cast<std::size_t>(k - 1)] = coeff(k) * k;
  return out;
}

BivariateSeries BivariateSeries::shifted_y(int k) const {
  BivariateSeries out(order());
  for (int i = 0; i + k <= order(); ++i) out.coeffs_[static_cast<std::size_t>(i + k)] = coeff(i);
  return out;
}

BivariateSeries beckwith_generating_series(int order) {
  BivariateSeries f(order);
  for (int k = 2; k <= order; ++k) f.set_coeff(k, f_tilde_poly(k - 2));
  return f;
}

namespace {

std::optional<int> first_difference(const BivariateSeries& a, const BivariateSeries& b, int through) {
  for (int k = 0; k <= through; ++k)
    if (a.coeff(k) != b.coeff(k)) return k;
  return std::nullopt;
}

}  // namespace

BeckwithResult beckwith_series_check(const BivariateSeries& f) {
  const int order = f.order();
  if (order < 4) throw std::invalid_argument("beckwith_series_check: order >= 4");
  BeckwithResult result;
  for (int k = 0; k <= order; ++k)
    if (f.coeff(k)(Rational(0)) != (k >= 2 ? 1 : 0)) result.initial_condition = false;

  // f f_y at y^k only uses f_a, f_b with a + b = k + 1 and a, b <= k, so
  // extending f_y with a zero top coefficient keeps every order exact.
  BivariateSeries fy(f.dy().coeffs(), order);
  result.pde_failure = first_difference(f.dx(), f * fy, order);

  BivariateSeries y(order);
  y.set_coeff(1, Poly(Rational(1)));
  const Poly x = Poly::x();
  BivariateSeries one(order);
  one.set_coeff(0, Poly(Rational(1)));
  const BivariateSeries lhs = f * (one - y - x * f);
  const BivariateSeries base = y + x * f;
  result.functional_failure = first_difference(lhs, base * base, order);
  return result;
}

BeckwithResult beckwith_series_check(int order) { return beckwith_series_check(beckwith_generating_series(order)); }

}  // namespace hillpoly
