#include "hillpoly/identities.hpp"

#include <algorithm>
#include <chrono>

#include "hillpoly/bivariate.hpp"
#include "hillpoly/euler.hpp"
#include "hillpoly/families.hpp"
#include "hillpoly/hills.hpp"
#include "hillpoly/rootloc.hpp"
#include "hillpoly/series.hpp"
#include "hillpoly/weyl.hpp"

namespace hillpoly {

namespace {

// Records cases in ascending order and keeps the first failure.
class Ledger {
 public:
  Ledger(std::string name, int range) {
    report_.name = std::move(name);
    report_.range = range;
  }

  bool failed() const { return !report_.pass; }

  bool expect(bool ok, const std::string& label, const std::string& lhs = "", const std::string& rhs = "") {
    ++report_.cases;
    if (!ok && report_.pass) {
      report_.pass = false;
      report_.failing_case = label;
      report_.lhs = lhs;
      report_.rhs = rhs;
    }
    return ok;
  }

  bool equal(const Poly& a, const Poly& b, const std::string& label, char var = 'x') {
    return expect(a == b, label, to_string(a, var), to_string(b, var));
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  IdentityReport finish() { return std::move(report_); }

 private:
  IdentityReport report_;
};

std::string idx(const char* key, int v) { return std::string(key) + "=" + std::to_string(v); }

std::string params(const Rational& a, const Rational& b, const Rational& n) {
  return "alpha=" + to_string(a) + " beta=" + to_string(b) + " N=" + to_string(n);
}

const Poly kTwoTPlusOne{1, 2};

const std::vector<Rational>& param_values() {
  static const std::vector<Rational> v{0, 1, 2, Rational(1, 2)};
  return v;
}

const std::vector<Rational>& hahn_n_values() {
  static const std::vector<Rational> v{-2, -1, 5, 7};
  return v;
}

const std::vector<std::pair<Rational, Rational>>& jacobi_pairs() {
  static const std::vector<std::pair<Rational, Rational>> v{
      {0, 0}, {1, 1}, {1, 2}, {Rational(1, 2), 3}, {2, Rational(1, 3)}, {Rational(-1, 2), Rational(-1, 2)}};
  return v;
}

/// 1/(1-t)^k by repeated multiplication of the geometric series.
Poly geometric_power(int k, int order) {
  const Poly geometric(std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(1)));
  Poly s(Rational(1));
  for (int i = 0; i < k; ++i) s = series_mul(s, geometric, order);
  return s;
}

/// φ(t ∂_t) applied to a truncated series.
Poly apply_theta_poly(const Poly& phi, const Poly& series, int order) {
  Poly acc;
  Poly power = truncate(series, order);
  for (std::size_t k = 0; k < phi.size(); ++k) {
    acc += phi.coeffs()[k] * power;
    power = theta(power);
  }
  return truncate(acc, order);
}

/// (1 + θ/j) applied to a truncated series.
Poly one_plus_theta_over(int j, const Poly& series) { return series + theta(series) / j; }

// -- Jacobi forms of f, f~ and g ---------------------------------------------

IdentityReport f_tilde_hypergeometric(int range) {
  Ledger l("f-tilde-hypergeometric", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    const std::vector<Poly> upper{Poly(Rational(-m)), Poly(Rational(m + 3))};
    const std::vector<Rational> lower{2};
    l.equal(f_tilde_poly(m), hypergeometric_terminating(upper, lower, Poly{0, -1}), idx("m", m), 't');
  }
  return l.finish();
}

IdentityReport f_tilde_jacobi(int range) {
  Ledger l("f-tilde-jacobi", range);
  for (int m = 0; m <= range && !l.failed(); ++m)
    l.equal(f_tilde_poly(m), compose(jacobi(m, 1, 1), kTwoTPlusOne) / (m + 1), idx("m", m), 't');
  return l.finish();
}

IdentityReport f_jacobi_moebius(int range) {
  Ledger l("f-jacobi-moebius", range);
  for (int m = 0; m <= range && !l.failed(); ++m)
    l.equal(f_poly(m), moebius_substitute(jacobi(m, 1, 1), 1, 2, 1, 0) / (m + 1), idx("m", m), 't');
  return l.finish();
}

IdentityReport g_jacobi_moebius(int range) {
  Ledger l("g-jacobi-moebius", range);
  for (int m = 0; m <= range && !l.failed(); ++m)
    l.equal(g_poly(m), moebius_substitute(jacobi(m, 1, 1), 1, 1, 1, -1) / (m + 1), idx("m", m), 't');
  return l.finish();
}

IdentityReport f_tilde_legendre_derivative(int range) {
  Ledger l("f-tilde-legendre-derivative", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    Rational c(2, (m + 1) * (m + 2));
    c.canonicalize();
    l.equal(f_tilde_poly(m), c * compose(derivative(legendre(m + 1)), kTwoTPlusOne), idx("m", m), 't');
  }
  return l.finish();
}

IdentityReport g_self_reciprocal(int range) {
  Ledger l("g-self-reciprocal", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    const Poly g = g_poly(m);
    bool positive_integers = g.deg() == m;
    for (const auto& c : g.coeffs()) positive_integers = positive_integers && is_integer(c) && c > 0;
    l.expect(positive_integers, idx("m", m) + " coefficients", to_string(g, 't'), "positive integers");
    l.equal(reverse(g), g, idx("m", m), 't');
  }
  return l.finish();
}

IdentityReport g_from_f_shift(int range) {
  Ledger l("g-from-f-shift", range);
  for (int m = 0; m <= range && !l.failed(); ++m) l.equal(shift(f_poly(m), -1), g_poly(m), idx("m", m), 't');
  return l.finish();
}

// -- Euler duality and Q_m ---------------------------------------------------

IdentityReport h_series_g(int range) {
  Ledger l("h-series-g", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    const int order = 3 * m + 10;
    const Poly h = h_poly(m);
    l.equal(value_series(h, order), series_mul(g_poly(m), series_one_minus_t_inverse_power(2 * m + 3, order), order),
            idx("m", m) + " series", 't');
    l.expect(defect(h) == m + 2, idx("m", m) + " defect", std::to_string(defect(h)), std::to_string(m + 2));
    l.equal(euler_transform(h).p, g_poly(m), idx("m", m) + " transform", 't');
  }
  return l.finish();
}

IdentityReport q_euler_dual(int range) {
  Ledger l("q-euler-dual", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    const Poly q = q_poly_via_nabla(m);
    const EulerPair pair = euler_transform(q);
    l.equal(pair.p, g_poly(m), idx("m", m) + " E(Q_m)", 't');
    l.expect(pair.d == m && pair.e == m && pair.defect == 0, idx("m", m) + " degrees");
    l.equal(inverse_euler(g_poly(m)), q, idx("m", m) + " inverse", 's');
  }
  return l.finish();
}

IdentityReport q_equals_hahn(int range) {
  Ledger l("Q-equals-hahn", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    const Poly lhs = Rational(factorial(static_cast<unsigned long>(m + 1))) * q_poly(m);
    l.equal(lhs, shift(hahn_explicit(m, 1, 1, -2), -1), idx("m", m), 's');
  }
  return l.finish();
}

IdentityReport q_nabla_vs_inverse_euler(int range) {
  Ledger l("q-nabla-vs-inverse-euler", range);
  for (int m = 0; m <= range && !l.failed(); ++m)
    l.equal(q_poly_via_nabla(m), q_poly_via_inverse_euler(m), idx("m", m), 's');
  return l.finish();
}

IdentityReport q_reflection(int range) {
  Ledger l("q-reflection", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    const Poly q = q_poly(m);
    l.equal(compose(q, Poly{-1, -1}), m % 2 == 0 ? q : -q, idx("m", m), 's');
  }
  return l.finish();
}

IdentityReport q_integer_valued(int range) {
  Ledger l("q-integer-valued", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    const Poly q = q_poly(m);
    // m+1 consecutive integer values force integer values everywhere
    for (int n = 0; n <= m && !l.failed(); ++n)
      l.expect(is_integer(q(Rational(n))), idx("m", m) + " " + idx("n", n), to_string(q(Rational(n))), "integer");
  }
  return l.finish();
}

IdentityReport b_coefficient_reciprocity(int range) {
  Ledger l("b-coefficient-reciprocity", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    const Poly g = g_poly(m);
    for (int j = 0; j <= m && !l.failed(); ++j) {
      const Rational rhs = h_poly(j - 1)(Rational(m - j));
      l.expect(g.coeff(j) == rhs, idx("m", m) + " " + idx("j", j), to_string(g.coeff(j)), to_string(rhs));
    }
  }
  return l.finish();
}

// -- Jacobi family -------------------------------------------------------------

IdentityReport jacobi_reflection(int range) {
  Ledger l("jacobi-reflection", range);
  for (const auto& [a, b] : jacobi_pairs())
    for (int n = 0; n <= range && !l.failed(); ++n) {
      const Poly lhs = compose(jacobi(n, a, b), Poly{0, -1});
      const Poly rhs = jacobi(n, b, a);
      l.equal(lhs, n % 2 == 0 ? rhs : -rhs, idx("n", n) + " alpha=" + to_string(a) + " beta=" + to_string(b));
    }
  return l.finish();
}

IdentityReport jacobi_hypergeometric_form(int range) {
  Ledger l("jacobi-hypergeometric", range);
  for (const auto& a : param_values())
    for (const auto& b : param_values())
      for (int n = 0; n <= range && !l.failed(); ++n)
        l.equal(jacobi(n, a, b), jacobi_hypergeometric(n, a, b),
                idx("n", n) + " alpha=" + to_string(a) + " beta=" + to_string(b));
  return l.finish();
}

IdentityReport jacobi_derivative(int range) {
  Ledger l("jacobi-derivative", range);
  for (const auto& [a, b] : jacobi_pairs())
    for (int n = 1; n <= range && !l.failed(); ++n) {
      const Rational c = (n + a + b + 1) / 2;
      l.equal(derivative(jacobi(n, a, b)), c * jacobi(n - 1, a + 1, b + 1),
              idx("n", n) + " alpha=" + to_string(a) + " beta=" + to_string(b));
    }
  return l.finish();
}

IdentityReport jacobi_differential_equation(int range) {
  Ledger l("jacobi-differential-equation", range);
  for (const auto& [a, b] : jacobi_pairs())
    for (int n = 0; n <= range && !l.failed(); ++n) {
      const Poly y = jacobi(n, a, b);
      const Poly lhs = Poly{1, 0, -1} * derivative(y, 2) + Poly{Rational(b - a), Rational(-(a + b + 2))} * derivative(y) +
                       Rational(n * (n + a + b + 1)) * y;
      l.equal(lhs, Poly(), idx("n", n) + " alpha=" + to_string(a) + " beta=" + to_string(b));
    }
  return l.finish();
}

IdentityReport legendre_generating_function(int range) {
  Ledger l("legendre-generating-function", range);
  const int order = range;
  // (1 - u)^{-1/2} = Σ C(2k,k)/4^k u^k with u = 2xy - y^2
  BivariateSeries u(order);
  if (order >= 1) u.set_coeff(1, Poly{0, 2});
  if (order >= 2) u.set_coeff(2, Poly(Rational(-1)));
  BivariateSeries sum(order);
  BivariateSeries power(order);
  power.set_coeff(0, Poly(Rational(1)));
  for (int k = 0; k <= order; ++k) {
    Rational c(binomial(static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k)));
    for (int i = 0; i < k; ++i) c /= 4;
    sum += Poly(c) * power;
    power = power * u;
  }
  for (int n = 0; n <= order && !l.failed(); ++n) l.equal(sum.coeff(n), legendre(n), idx("n", n));
  return l.finish();
}

IdentityReport legendre_derivation(int range) {
  Ledger l("legendre-derivation", range);
  for (int n = 1; n <= range && !l.failed(); ++n) {
    const Poly p = legendre(n);
    l.equal(Poly{-1, 0, 1} * derivative(p), n * (Poly::x() * p - legendre(n - 1)), idx("n", n));
  }
  return l.finish();
}

// -- Hahn family ---------------------------------------------------------------

template <typename F>
void hahn_grid(Ledger& l, int m_lo, int m_hi, F&& body) {
  for (const auto& a : param_values())
    for (const auto& b : param_values())
      for (const auto& n : hahn_n_values())
        for (int m = m_lo; m <= m_hi && !l.failed(); ++m) body(m, a, b, n);
}

IdentityReport hahn_explicit_vs_rodrigues(int range) {
  Ledger l("hahn-explicit-vs-rodrigues", range);
  hahn_grid(l, 0, std::min(range, 6), [&](int m, const Rational& a, const Rational& b, const Rational& n) {
    l.equal(hahn_explicit(m, a, b, n), hahn_rodrigues(m, a, b, n), idx("m", m) + " " + params(a, b, n), 'n');
  });
  return l.finish();
}

IdentityReport hahn_explicit_vs_3f2(int range) {
  Ledger l("hahn-explicit-vs-hypergeometric", range);
  for (const auto& a : param_values())
    for (const auto& b : param_values())
      for (const Rational& n : {Rational(-2), Rational(-1), Rational(7), Rational(5, 2)})
        for (int m = 0; m <= std::min(range, 6) && !l.failed(); ++m)
          l.equal(hahn_explicit(m, a, b, n), hahn_explicit_3f2(m, a, b, n), idx("m", m) + " " + params(a, b, n), 'n');
  return l.finish();
}

IdentityReport hahn_difference_equation(int range) {
  Ledger l("hahn-difference-equation", range);
  hahn_grid(l, 0, range, [&](int m, const Rational& a, const Rational& b, const Rational& n) {
    const HahnScheme s = hahn_scheme(a, b, n);
    const Poly f = hahn_explicit(m, a, b, n);
    const Poly lhs = s.sigma * forward_diff(backward_diff(f)) + s.tau * forward_diff(f) + s.lambda(m) * f;
    l.equal(lhs, Poly(), idx("m", m) + " " + params(a, b, n), 'n');
  });
  return l.finish();
}

IdentityReport hahn_forward_difference(int range) {
  Ledger l("hahn-forward-difference", range);
  hahn_grid(l, 1, range, [&](int m, const Rational& a, const Rational& b, const Rational& n) {
    l.equal(forward_diff(hahn_explicit(m, a, b, n)),
            Rational(a + b + m + 1) * hahn_explicit(m - 1, a + 1, b + 1, n - 1), idx("m", m) + " " + params(a, b, n),
            'n');
  });
  return l.finish();
}

IdentityReport hahn_reflection(int range) {
  Ledger l("hahn-reflection", range);
  hahn_grid(l, 0, range, [&](int m, const Rational& a, const Rational& b, const Rational& n) {
    const Poly lhs = compose(hahn_explicit(m, a, b, n), Poly{Rational(n - 1), -1});
    const Poly rhs = hahn_explicit(m, b, a, n);
    l.equal(lhs, m % 2 == 0 ? rhs : -rhs, idx("m", m) + " " + params(a, b, n), 'n');
  });
  return l.finish();
}

IdentityReport hahn_orthogonality(int range) {
  Ledger l("hahn-orthogonality", range);
  for (int big_n = 1; big_n <= std::min(range, 8); ++big_n)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        std::vector<Poly> h;
        for (int m = 0; m < big_n; ++m) h.push_back(hahn_explicit(m, a, b, big_n));
        std::string norms;
        for (int m = 0; m < big_n && !l.failed(); ++m)
          for (int mp = 0; mp <= m && !l.failed(); ++mp) {
            Rational sum = 0;
            for (int n = 0; n < big_n; ++n)
              sum += h[static_cast<std::size_t>(m)](Rational(n)) * h[static_cast<std::size_t>(mp)](Rational(n)) *
                     hahn_weight(n, a, b, big_n);
            const std::string label =
                "N=" + std::to_string(big_n) + " alpha=" + std::to_string(a) + " beta=" + std::to_string(b) + " " +
                idx("m", m) + " " + idx("m'", mp);
            if (mp == m) {
              l.expect(sum > 0, label + " norm", to_string(sum), "> 0");
              norms += (m == 0 ? "" : ", ") + to_string(sum);
            } else {
              l.expect(sum == 0, label, to_string(sum), "0");
            }
          }
        if (a == 0 && b == 0) l.note("d^2_m(0,0," + std::to_string(big_n) + ") = [" + norms + "]");
      }
  return l.finish();
}

IdentityReport hahn_jacobi_limit(int range) {
  Ledger l("hahn-jacobi-limit", range);
  for (const auto& a : param_values())
    for (const auto& b : param_values())
      for (int m = 0; m <= std::min(range, 5) && !l.failed(); ++m) {
        // [n^j] h_m(n, N) is a polynomial in N; interpolate on m+1 nodes and
        // confirm on two more.
        std::vector<Rational> nodes;
        std::vector<Poly> samples;
        for (int i = 0; i < m + 3; ++i) {
          nodes.emplace_back(m + 1 + 2 * i);
          samples.push_back(hahn_explicit(m, a, b, nodes.back()));
        }
        Poly limit;
        for (int j = 0; j <= m && !l.failed(); ++j) {
          std::vector<Rational> ys;
          for (const auto& s : samples) ys.push_back(s.coeff(j));
          const Poly cj = interpolate(std::span(nodes).first(static_cast<std::size_t>(m + 1)),
                                      std::span(ys).first(static_cast<std::size_t>(m + 1)));
          bool consistent = true;
          for (std::size_t i = static_cast<std::size_t>(m + 1); i < nodes.size(); ++i)
            consistent = consistent && cj(nodes[i]) == ys[i];
          const std::string label = idx("m", m) + " " + idx("j", j) + " alpha=" + to_string(a) + " beta=" + to_string(b);
          l.expect(consistent, label + " polynomial in N");
          l.expect(cj.degree() <= Degree(m - j), label + " growth", to_string(cj, 'N'), "degree <= m-j");
          limit += Poly::monomial(cj.coeff(m - j), j);
        }
        l.equal(limit, compose(jacobi(m, a, b), Poly{-1, 2}),
                idx("m", m) + " alpha=" + to_string(a) + " beta=" + to_string(b));
      }
  return l.finish();
}

// -- Series lemmas -------------------------------------------------------------

IdentityReport theta_lemma(int range) {
  Ledger l("series-theta-lemma", range);
  const int order = range;
  const Poly geometric = geometric_power(1, order);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    l.equal(apply_theta_poly(h_poly(m), geometric, order), value_series(h_poly(m), order), idx("m", m) + " h_m", 't');
    l.equal(apply_theta_poly(q_poly(m), geometric, order), value_series(q_poly(m), order), idx("m", m) + " Q_m", 't');
  }
  return l.finish();
}

IdentityReport operator_lemma_a(int range) {
  Ledger l("operator-lemma-a", range);
  const int order = range;
  for (int ell = 1; ell <= range && !l.failed(); ++ell) {
    Poly s = geometric_power(1, order);
    for (int j = 1; j <= ell; ++j) s = truncate(one_plus_theta_over(j, s), order);
    l.equal(s, geometric_power(ell + 1, order), idx("l", ell), 't');
  }
  return l.finish();
}

Poly lemma_b_numerator(int ell, int i) {
  std::vector<Rational> c;
  for (int j = 0; j <= i; ++j)
    c.emplace_back(Rational(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(j)) *
                            binomial(static_cast<unsigned long>(ell), static_cast<unsigned long>(j + 1))) /
                   ell);
  return Poly(std::move(c));
}

IdentityReport operator_lemma_b(int range) {
  Ledger l("operator-lemma-b", range);
  const int order = range;
  for (int ell = 1; ell <= range && !l.failed(); ++ell) {
    Poly s = geometric_power(ell + 1, order);
    for (int i = 0; i <= range && !l.failed(); ++i) {
      if (i > 0) s = truncate(one_plus_theta_over(i + 1, s), order);
      l.equal(s, series_mul(lemma_b_numerator(ell, i), geometric_power(ell + i + 1, order), order),
              idx("l", ell) + " " + idx("i", i), 't');
    }
  }
  return l.finish();
}

IdentityReport h_product_assembly(int range) {
  Ledger l("h-product-assembly", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    l.equal(lemma_b_numerator(m + 2, m), g_poly(m), idx("m", m) + " numerator", 't');
    // h_m = h^(2) h^(1) with h^(1)(n) = C(n+m+2, m+2), h^(2)(n) = ∏_{j=2}^{m+1}(1 + n/j)
    Poly h1(Rational(1));
    for (int i = 1; i <= m + 2; ++i) h1 *= Poly{i, 1};
    h1 /= Rational(factorial(static_cast<unsigned long>(m + 2)));
    Poly h2(Rational(1));
    for (int j = 2; j <= m + 1; ++j) h2 *= Poly{1, Rational(1, j)};
    l.equal(h2 * h1, h_poly(m), idx("m", m) + " factorization", 's');
  }
  return l.finish();
}

// -- Popoviciu and Hecke -----------------------------------------------------

std::vector<std::pair<std::string, Poly>> hecke_inputs(int range) {
  std::vector<std::pair<std::string, Poly>> inputs;
  for (int m = 0; m <= range; ++m) inputs.emplace_back("Q_" + std::to_string(m), q_poly(m));
  for (const auto& hill : enumerate_hills(std::min(range, 10)))
    inputs.emplace_back("Q_mu mu=" + to_string(hill), hill_q(hill));
  return inputs;
}

IdentityReport popoviciu(int range) {
  Ledger l("popoviciu", range);
  for (const auto& [label, q] : hecke_inputs(range)) {
    if (l.failed()) break;
    const int order = std::max(range, q.deg() + 2);
    const auto r = popoviciu_check(q, order);
    l.expect(r.pass, label + (r.witness_order ? " order=" + std::to_string(*r.witness_order) : ""),
             to_string(r.lhs), to_string(r.rhs));
    const EulerPair pair = euler_transform(q);
    l.expect(reciprocal_series_order(pair) == pair.defect + 1, label + " ord_inf F");
  }
  return l.finish();
}

IdentityReport hecke(int range) {
  Ledger l("hecke", range);
  for (const auto& [label, q] : hecke_inputs(range)) {
    if (l.failed()) break;
    const auto r = hecke_symmetry_check(q);
    l.expect(r.sides_agree() && r.q_side_sign == 1, label,
             r.q_side_sign ? std::to_string(*r.q_side_sign) : "none",
             r.p_side_sign ? std::to_string(*r.p_side_sign) : "none");
  }
  return l.finish();
}

// -- Hills and root localization ---------------------------------------------------

IdentityReport hill_reflection(int range) {
  Ledger l("hill-reflection", range);
  for (const auto& hill : enumerate_hills(std::min(range, 10))) {
    if (l.failed()) break;
    const std::string label = "mu=" + to_string(hill);
    const Poly q = hill_q(hill);
    const Poly p = hill_dual(hill);
    l.expect(q.deg() == hill.dual_degree() && p.deg() == hill.dual_degree() && q.coeff(0) == 1, label + " degrees");
    l.equal(compose(q, Poly{-1, -1}), hill.dual_degree() % 2 == 0 ? q : -q, label + " Q symmetry", 's');
    l.equal(reverse(p), p, label + " P reciprocity", 't');
  }
  return l.finish();
}

IdentityReport hill_boundary(int range) {
  Ledger l("hill-boundary", range);
  for (const auto& hill : enumerate_hills(std::min(range, 10))) {
    if (l.failed()) break;
    const std::string label = "mu=" + to_string(hill);
    const Poly h = hill_poly(hill).h;
    l.equal(gcd(h, shift(h, -1)), hill_poly(boundary_by_min(hill)).h, label + " gcd");
    const PhiFactors phi = phi_factors(hill);
    l.equal(phi.minus, reflect_phi_plus(phi, hill.width()), label + " phi reflection");
  }
  return l.finish();
}

IdentityReport hill_boundary_chain(int range) {
  Ledger l("hill-boundary-chain", range);
  for (const auto& hill : enumerate_hills(std::min(range, 8))) {
    if (l.failed()) break;
    Hill current = hill;
    Poly p(Rational(1));
    for (int a = hill.width(); a >= 1 && !l.failed(); --a) {
      const Poly phi = hill_poly(current).h;
      const Hill next = boundary(current);
      const Poly q = exact_div(backward_diff(phi * p), hill_poly(next).h);
      const std::string label = "mu=" + to_string(hill) + " " + idx("a", a);
      bool on_line = false;
      try {
        on_line = critical_line_check(q, a).on_line();
      } catch (const std::invalid_argument&) {
        on_line = false;
      }
      l.expect(on_line, label, to_string(q, 'x'), "roots on Re x = -a/2");
      current = next;
      p = q;
    }
    l.equal(p, hill_poly(hill).h(Rational(0)) * hill_q(hill), "mu=" + to_string(hill) + " final", 's');
  }
  return l.finish();
}

IdentityReport hill_critical_line(int range) {
  Ledger l("hill-critical-line", range);
  for (const auto& hill : enumerate_hills(std::min(range, 10))) {
    if (l.failed()) break;
    const auto cert = critical_line_check(hill_q(hill), 1);
    l.expect(cert.on_line(), "mu=" + to_string(hill), cert.witness.value_or(""), "on-line");
  }
  for (int m = 0; m <= range && !l.failed(); ++m) {
    const auto cert = critical_line_check(q_poly(m), 1);
    l.expect(cert.on_line(), "Q_" + std::to_string(m), cert.witness.value_or(""), "on-line");
    // h_m^{(1,1)}(s, -2) = (m+1)! Q_m(s+1), so its line is Re s = -3/2
    const auto hahn = critical_line_check(hahn_explicit(m, 1, 1, -2), 3);
    l.expect(hahn.on_line(), "hahn " + idx("m", m), hahn.witness.value_or(""), "on-line");
  }
  return l.finish();
}

IdentityReport negative_roots(int range) {
  Ledger l("negative-simple-roots", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    const auto r = negative_simple_roots_check(g_poly(m));
    l.expect(r.pass, "g_" + std::to_string(m), r.witness.value_or(""), "pass");
  }
  for (const auto& hill : enumerate_hills(std::min(range, 10))) {
    if (l.failed()) break;
    const auto r = negative_simple_roots_check(hill_dual(hill));
    l.expect(r.pass, "P_mu mu=" + to_string(hill), r.witness.value_or(""), "pass");
  }
  return l.finish();
}

IdentityReport eulerian(int range) {
  Ledger l("eulerian", range);
  for (int k = 0; k <= range && !l.failed(); ++k) {
    const EulerianMember member = eulerian_family(k);
    l.equal(hill_dual(Hill({k + 1})), member.p, idx("k", k) + " P_nu", 't');
    l.equal(hill_q(Hill({k + 1})), member.q, idx("k", k) + " Q_nu", 's');
    const auto cert = critical_line_check(member.q, 1);
    const int roots = (cert.odd_flag ? 1 : 0) + 2 * cert.real_root_count;
    l.expect(cert.on_line() && roots == k, idx("k", k) + " roots", std::to_string(roots), std::to_string(k));
  }
  return l.finish();
}

// -- Weyl and Beckwith -----------------------------------------------------------

IdentityReport hirzebruch(int range) {
  Ledger l("hirzebruch", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    const auto r = verify_hirzebruch(m);
    l.equal(r.weyl, r.hilbert, idx("m", m), 'n');
    l.expect(r.weyl.deg() == 2 * m + 2, idx("m", m) + " degree");
  }
  return l.finish();
}

IdentityReport weyl_integrality(int range) {
  Ledger l("weyl-integrality", range);
  for (int m = 0; m <= range && !l.failed(); ++m) {
    const auto r = integrality_scan(m, -50, 50);
    l.expect(r.pass, idx("m", m), r.failure.value_or(""), "integral, zeros at -1..-m-2, symmetric");
  }
  return l.finish();
}

IdentityReport beckwith(int range) {
  const int order = std::max(range, 4);
  Ledger l("beckwith", range);
  const auto r = beckwith_series_check(order);
  l.expect(r.initial_condition, "f(0,y) = y^2/(1-y)");
  l.expect(!r.pde_failure, "PDE y^" + std::to_string(r.pde_failure.value_or(-1)));
  l.expect(!r.functional_failure, "functional equation y^" + std::to_string(r.functional_failure.value_or(-1)));
  return l.finish();
}

std::vector<IdentityInfo> build_registry() {
  return {
      {"f-tilde-hypergeometric", "f~_m = 2F1(-m, m+3; 2; -t)", f_tilde_hypergeometric},
      {"f-tilde-jacobi", "f~_m = P_m^(1,1)(2t+1)/(m+1)", f_tilde_jacobi},
      {"f-jacobi-moebius", "f_m = t^m P_m^(1,1)((t+2)/t)/(m+1)", f_jacobi_moebius},
      {"g-jacobi-moebius", "g_m = (t-1)^m P_m^(1,1)((t+1)/(t-1))/(m+1)", g_jacobi_moebius},
      {"f-tilde-legendre-derivative", "f~_m = 2 P'_{m+1}(2t+1)/((m+1)(m+2))", f_tilde_legendre_derivative},
      {"g-self-reciprocal", "g_m(1/t) = t^-m g_m(t), positive integer coefficients", g_self_reciprocal},
      {"g-from-f-shift", "g_m(t) = f_m(t-1)", g_from_f_shift},
      {"h-series-g", "sum h_m(n) t^n = g_m/(1-t)^(2m+3), defect(h_m) = m+2", h_series_g},
      {"q-euler-dual", "E(Q_m) = g_m and inverse Euler of g_m is Q_m", q_euler_dual},
      {"Q-equals-hahn", "(m+1)! Q_m(n) = h_m^(1,1)(n-1, -2)", q_equals_hahn},
      {"q-nabla-vs-inverse-euler", "nabla^(m+2) h_m = inverse Euler of g_m", q_nabla_vs_inverse_euler},
      {"q-reflection", "Q_m(-1-s) = (-1)^m Q_m(s)", q_reflection},
      {"q-integer-valued", "Q_m(n) is an integer for integer n", q_integer_valued},
      {"b-coefficient-reciprocity", "b_jm = h_{j-1}(m-j), h_{-1} = 1", b_coefficient_reciprocity},
      {"jacobi-reflection", "P_n^(a,b)(-x) = (-1)^n P_n^(b,a)(x)", jacobi_reflection},
      {"jacobi-hypergeometric", "binomial sum form = C(n+a,n) 2F1 form", jacobi_hypergeometric_form},
      {"jacobi-derivative", "d/dx P_n^(a,b) = (n+a+b+1)/2 P_{n-1}^(a+1,b+1)", jacobi_derivative},
      {"jacobi-differential-equation", "(1-x^2)y'' + (b-a-(a+b+2)x)y' + n(n+a+b+1)y = 0",
       jacobi_differential_equation},
      {"legendre-generating-function", "sum P_n(x) y^n = (1-2xy+y^2)^(-1/2), truncated",
       legendre_generating_function},
      {"legendre-derivation", "(x^2-1)P'_n = n[x P_n - P_{n-1}]", legendre_derivation},
      {"hahn-explicit-vs-rodrigues", "3F2 form = difference Rodrigues form", hahn_explicit_vs_rodrigues},
      {"hahn-explicit-vs-hypergeometric", "cancelled form = literal 3F2 where defined", hahn_explicit_vs_3f2},
      {"hahn-difference-equation", "sigma D nabla f + tau D f + lambda_m f = 0", hahn_difference_equation},
      {"hahn-forward-difference", "D h_m^(a,b)(n,N) = (a+b+m+1) h_{m-1}^(a+1,b+1)(n,N-1)", hahn_forward_difference},
      {"hahn-reflection", "h_m^(a,b)(N-1-x,N) = (-1)^m h_m^(b,a)(x,N)", hahn_reflection},
      {"hahn-orthogonality", "sum_n h_m h_m' rho = d^2_m delta_mm'", hahn_orthogonality},
      {"hahn-jacobi-limit", "N^-m h_m(Nx, N) -> P_m(2x-1)", hahn_jacobi_limit},
      {"series-theta-lemma", "sum phi(n) t^n = phi(t d/dt) 1/(1-t)", theta_lemma},
      {"operator-lemma-a", "prod_{j<=l}(1 + theta/j) 1/(1-t) = 1/(1-t)^(l+1)", operator_lemma_a},
      {"operator-lemma-b", "prod_{j=2}^{i+1}(1 + theta/j) 1/(1-t)^(l+1)", operator_lemma_b},
      {"h-product-assembly", "h_m = h^(2) h^(1) and the operator numerator is g_m", h_product_assembly},
      {"popoviciu", "F(1/t) = -sum Q(-n) t^n and ord_inf F = f+1", popoviciu},
      {"hecke", "reciprocity of P iff functional equation of Q", hecke},
      {"hill-reflection", "Q_mu(-1-s) = (-1)^d Q_mu(s), P_mu self-reciprocal", hill_reflection},
      {"hill-boundary", "h_{d mu} = gcd(h_mu(x), h_mu(x-1)), phi reflection", hill_boundary},
      {"hill-boundary-chain", "nabla(phi p) = (d phi) q with q on the next line", hill_boundary_chain},
      {"hill-critical-line", "roots of Q_mu, Q_m on Re s = -1/2; Hahn h_m^(1,1)(s,-2) on Re s = -3/2", hill_critical_line},
      {"negative-simple-roots", "roots of g_m, P_mu simple and negative", negative_roots},
      {"eulerian", "P_nu_k is Eulerian; k roots of _kQ on the line", eulerian},
      {"hirzebruch", "Weyl dimension of L(n varpi_2) for A_{m+2} = h_m(n)", hirzebruch},
      {"weyl-integrality", "h_m integer valued, zero locus, symmetry", weyl_integrality},
      {"beckwith", "f_x = f f_y, f(0,y) = y^2/(1-y), phi(1-y-x phi) = (y+x phi)^2", beckwith},
  };
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> registry = build_registry();
  return registry;
}

IdentityReport verify_identity(std::string_view name, int range) {
  if (range < 1) throw std::invalid_argument("verify_identity: range >= 1");
  const auto& reg = identity_registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const IdentityInfo& i) { return i.name == name; });
  if (it == reg.end()) throw UnknownIdentity(std::string(name));
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report;
  try {
    report = it->check(range);
  } catch (const std::exception& e) {
    // a checker that throws has found an inconsistency, not a usage error
    report.name = it->name;
    report.range = range;
    report.pass = false;
    report.failing_case = "exception";
    report.lhs = e.what();
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace hillpoly
