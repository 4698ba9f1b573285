#ifndef HILLPOLY_BIVARIATE_HPP
#define HILLPOLY_BIVARIATE_HPP

#include <optional>
#include <vector>

#include "hillpoly/poly.hpp"

namespace hillpoly {

/// Truncated series Σ_{k=0}^{order} c_k(x) y^k with polynomial coefficients.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
  BivariateSeries(std::vector<Poly> coeffs, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Poly& coeff(int k) const;
  void set_coeff(int k, Poly p);
  const std::vector<Poly>& coeffs() const { return coeffs_; }

  BivariateSeries& operator+=(const BivariateSeries& other);
  BivariateSeries& operator-=(const BivariateSeries& other);
  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  /// Product truncated at the smaller order.
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  /// Multiplication by a polynomial in x.
  friend BivariateSeries operator*(const Poly& c, BivariateSeries a);

  /// ∂/∂x, coefficient-wise.
  BivariateSeries dx() const;
  /// ∂/∂y; the result loses one order of precision.
  BivariateSeries dy() const;
  /// Multiplication by y^k, keeping the order.
  BivariateSeries shifted_y(int k) const;

  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) = default;

 private:
  std::vector<Poly> coeffs_;
};

/// f(x, y) = Σ_{n≥3} f̃_{n-3}(x) y^{n-1} through y^order.
BivariateSeries beckwith_generating_series(int order);

struct BeckwithResult {
  bool initial_condition = true;
  std::optional<int> pde_failure;         // first y-order where f_x != f f_y
  std::optional<int> functional_failure;  // first y-order where the functional equation fails
  bool pass() const { return initial_condition && !pde_failure && !functional_failure; }
};

/// Checks f(0,y) = y^2/(1-y), f_x = f f_y, and φ(1-y-xφ) = (y+xφ)^2 with
/// φ = f, each coefficient-wise through y^order. Requires order >= 4.
BeckwithResult beckwith_series_check(int order);
BeckwithResult beckwith_series_check(const BivariateSeries& f);

}  // namespace hillpoly

#endif  // HILLPOLY_BIVARIATE_HPP
