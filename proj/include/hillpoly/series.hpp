#ifndef HILLPOLY_SERIES_HPP
#define HILLPOLY_SERIES_HPP

#include "hillpoly/poly.hpp"

// Truncated formal power series are carried as Poly together with an order:
// only coefficients of t^0 .. t^order are meaningful.

namespace hillpoly {

Poly truncate(const Poly& p, int order);

Poly series_mul(const Poly& a, const Poly& b, int order);

/// 1/(1-t)^k through t^order, i.e. coefficients C(n+k-1, k-1).
Poly series_one_minus_t_inverse_power(int k, int order);

/// (1-t)^k as an exact polynomial.
Poly one_minus_t_power(int k);

/// Σ_{n=0}^{order} Q(n) tⁿ.
Poly value_series(const Poly& q, int order);

/// The operator t d/dt applied to a truncated series.
Poly theta(const Poly& series);

}  // namespace hillpoly

#endif  // HILLPOLY_SERIES_HPP
