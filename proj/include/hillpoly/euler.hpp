#ifndef HILLPOLY_EULER_HPP
#define HILLPOLY_EULER_HPP

#include <optional>
#include <string>

#include "hillpoly/poly.hpp"

namespace hillpoly {

/// Q(s) with Q(0) = 1 and its Euler transform P(t):
///   Σ_{n≥0} Q(n) tⁿ = P(t) / (1-t)^{d+1},  d = deg Q, e = deg P.
/// The defect is d - e = max{a : h_a(s) | Q(s)}.
struct EulerPair {
  Poly q;
  Poly p;
  int d = 0;
  int e = 0;
  int defect = 0;
};

EulerPair euler_transform(const Poly& q);

/// R with Σ R(n) tⁿ = P(t)/(1-t)^{e+1}; requires P(0) = 1 and P(1) != 0.
Poly inverse_euler(const Poly& p);

/// max a with Q(-1) = ... = Q(-a) = 0.
int defect(const Poly& q);

/// Expansion of F(1/t) at 0 through t^order, F(t) = P(t)/(1-t)^{d+1}.
Poly reciprocal_series(const EulerPair& pair, int order);

/// Lowest order with a nonzero coefficient in the expansion of F(1/t).
int reciprocal_series_order(const EulerPair& pair);

struct PopoviciuResult {
  bool pass = true;
  /// First mismatching order on failure.
  std::optional<int> witness_order;
  Rational lhs;  // coefficient of F(1/t) at the witness order
  Rational rhs;  // -Q(-n) at the witness order
};

/// F(1/t) = -Σ_{n≥1} Q(-n) tⁿ through t^order.
PopoviciuResult popoviciu_check(const Poly& q, int order);
/// Same check against a caller-supplied (possibly wrong) P.
PopoviciuResult popoviciu_check(const EulerPair& pair, int order);

struct HeckeResult {
  /// ε with Q(m) = ε (-1)^d Q(-f-1-m) as a polynomial identity, if any.
  std::optional<int> q_side_sign;
  /// ε with reverse(P) = ε P, if any.
  std::optional<int> p_side_sign;
  bool symmetric() const { return q_side_sign.has_value(); }
  bool sides_agree() const { return q_side_sign == p_side_sign; }
};

HeckeResult hecke_symmetry_check(const Poly& q);

/// q / q(0); throws std::domain_error if q(0) = 0.
Poly normalize_at_zero(const Poly& q);

}  // namespace hillpoly

#endif  // HILLPOLY_EULER_HPP
