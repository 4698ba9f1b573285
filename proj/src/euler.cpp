#include "hillpoly/euler.hpp"

#include <stdexcept>

#include "hillpoly/series.hpp"

namespace hillpoly {

namespace {

void require_unit_constant(const Poly& q, const char* what) {
  if (q.is_zero() || q.coeff(0) != 1)
    throw std::invalid_argument(std::string(what) + ": requires Q(0) = 1");
}

}  // namespace

Poly normalize_at_zero(const Poly& q) {
  const Rational c = q.coeff(0);
  if (c == 0) throw std::domain_error("cannot normalize: Q(0) = 0");
  return q / c;
}

EulerPair euler_transform(const Poly& q) {
  require_unit_constant(q, "euler_transform");
  const int d = q.deg();
  const int check_order = 2 * d + 1;
  // The first 2d+2 series coefficients times (1-t)^{d+1} reproduce the true
  // product through t^{2d+1}; everything above degree d must vanish there.
  const Poly full = series_mul(value_series(q, check_order), one_minus_t_power(d + 1), check_order);
  for (int k = d + 1; k <= check_order; ++k)
    if (full.coeff(k) != 0) throw std::logic_error("euler_transform: series tail does not vanish");
  EulerPair pair;
  pair.q = q;
  pair.p = truncate(full, d);
  pair.d = d;
  pair.e = pair.p.deg();
  pair.defect = d - pair.e;
  if (pair.p(Rational(1)) == 0) throw std::logic_error("euler_transform: P(1) = 0");
  return pair;
}

Poly inverse_euler(const Poly& p) {
  require_unit_constant(p, "inverse_euler");
  if (p(Rational(1)) == 0) throw std::invalid_argument("inverse_euler: P(1) = 0");
  const int e = p.deg();
  Poly r;
  for (int k = 0; k <= e; ++k) {
    const Rational& pk = p.coeffs()[static_cast<std::size_t>(k)];
    if (pk == 0) continue;
    // C(n - k + e, e) = (n-k+1)(n-k+2)...(n-k+e) / e!
    Poly term(Rational(1));
    for (int i = 1; i <= e; ++i) term *= Poly{Rational(i - k), 1};
    r += term * (pk / Rational(factorial(static_cast<unsigned long>(e))));
  }
  return r;
}

int defect(const Poly& q) {
  require_unit_constant(q, "defect");
  int a = 0;
  while (q(Rational(-(a + 1))) == 0) ++a;
  return a;
}

Poly reciprocal_series(const EulerPair& pair, int order) {
  // F(1/t) = (-1)^{d+1} t^{d+1-e} rev(P)(t) / (1-t)^{d+1}
  const int shift_by = pair.d + 1 - pair.e;
  if (order < shift_by) return {};
  Poly s = series_mul(reverse(pair.p), series_one_minus_t_inverse_power(pair.d + 1, order), order - shift_by);
  s = Poly::monomial(1, shift_by) * s;
  if ((pair.d + 1) % 2 != 0) s = -s;
  return truncate(s, order);
}

int reciprocal_series_order(const EulerPair& pair) {
  const int upper = pair.d + 1 - pair.e;
  const Poly s = reciprocal_series(pair, upper);
  for (int k = 0; k <= upper; ++k)
    if (s.coeff(k) != 0) return k;
  throw std::logic_error("reciprocal_series_order: leading term vanished");
}

PopoviciuResult popoviciu_check(const EulerPair& pair, int order) {
  PopoviciuResult result;
  const Poly lhs = reciprocal_series(pair, order);
  for (int n = 0; n <= order; ++n) {
    const Rational expected = n == 0 ? Rational(0) : Rational(-pair.q(Rational(-n)));
    if (lhs.coeff(n) != expected) {
      result.pass = false;
      result.witness_order = n;
      result.lhs = lhs.coeff(n);
      result.rhs = expected;
      return result;
    }
  }
  return result;
}

PopoviciuResult popoviciu_check(const Poly& q, int order) {
  return popoviciu_check(euler_transform(q), order);
}

HeckeResult hecke_symmetry_check(const Poly& q) {
  const EulerPair pair = euler_transform(q);
  HeckeResult result;
  // Q(-f-1-s)
  const Poly reflected = compose(q, Poly{Rational(-pair.defect - 1), -1});
  const int parity = pair.d % 2 == 0 ? 1 : -1;
  for (int eps : {1, -1}) {
    if (q == reflected * (eps * parity)) {
      result.q_side_sign = eps;
      break;
    }
  }
  const Poly rev = reverse(pair.p);
  for (int eps : {1, -1}) {
    if (rev == pair.p * eps) {
      result.p_side_sign = eps;
      break;
    }
  }
  return result;
}

}  // namespace hillpoly
