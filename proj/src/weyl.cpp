#include "hillpoly/weyl.hpp"

#include <stdexcept>

#include "hillpoly/families.hpp"

namespace hillpoly {

Rational RootSystemA::pair_with_root(const std::vector<Rational>& v, std::pair<int, int> root) const {
  return v[static_cast<std::size_t>(root.first - 1)] - v[static_cast<std::size_t>(root.second - 1)];
}

RootSystemA root_system_a(int ell) {
  if (ell < 2) throw std::invalid_argument("root_system_a: rank >= 2");
  RootSystemA rs;
  rs.ell = ell;
  for (int i = 1; i <= ell + 1; ++i)
    for (int j = i + 1; j <= ell + 1; ++j) rs.positive_roots.emplace_back(i, j);
  for (int i = 1; i <= ell + 1; ++i) {
    rs.rho.emplace_back(ell + 2 - 2 * i, 2);
    rs.rho.back().canonicalize();
    Rational w(-2, ell + 1);
    w.canonicalize();
    if (i <= 2) w += 1;
    rs.varpi2.push_back(w);
  }
  return rs;
}

Poly weyl_dim_poly_by_roots(int ell) {
  const RootSystemA rs = root_system_a(ell);
  const std::vector<Rational> ones(static_cast<std::size_t>(ell + 1), Rational(1));
  Poly product(Rational(1));
  for (const auto& root : rs.positive_roots) {
    if (rs.pair_with_root(ones, root) != 0) throw std::logic_error("weyl: root not orthogonal to Σε_j");
    const Rational ratio = rs.pair_with_root(rs.varpi2, root) / rs.pair_with_root(rs.rho, root);
    product *= Poly{1, ratio};
  }
  return product;
}

Poly weyl_dim_poly_simplified(int ell) {
  if (ell < 2) throw std::invalid_argument("weyl_dim_poly: rank >= 2");
  Poly product(Rational(1));
  for (int j = 1; j <= ell - 1; ++j) product *= Poly{1, Rational(1, j)};
  for (int j = 2; j <= ell; ++j) product *= Poly{1, Rational(1, j)};
  return product;
}

Poly weyl_dim_poly(int ell) {
  Poly by_roots = weyl_dim_poly_by_roots(ell);
  if (by_roots != weyl_dim_poly_simplified(ell)) throw std::logic_error("weyl: root product != simplified product");
  return by_roots;
}

int plucker_dimension(int m) { return (m + 3) * (m + 2) / 2; }

HirzebruchResult verify_hirzebruch(int m) {
  if (m < 0) throw std::invalid_argument("verify_hirzebruch: m >= 0");
  HirzebruchResult r;
  r.m = m;
  r.plucker_dimension = plucker_dimension(m);
  r.weyl = weyl_dim_poly(m + 2);
  r.hilbert = h_poly(m);
  r.pass = r.weyl == r.hilbert;
  return r;
}

IntegralityResult integrality_scan(int m, int n_lo, int n_hi) {
  IntegralityResult r;
  const Poly h = h_poly(m);
  for (int n = n_lo; n <= n_hi; ++n) {
    const Rational v = h(Rational(n));
    const bool should_vanish = n <= -1 && n >= -m - 2;
    if (!is_integer(v)) {
      r.pass = false;
      r.failure = "h_" + std::to_string(m) + "(" + std::to_string(n) + ") = " + to_string(v) + " is not an integer";
      return r;
    }
    if ((v == 0) != should_vanish) {
      r.pass = false;
      r.failure = "h_" + std::to_string(m) + "(" + std::to_string(n) + ") = " + to_string(v) +
                  (should_vanish ? " should vanish" : " vanishes outside -1..-m-2");
      return r;
    }
  }
  if (compose(h, Poly{Rational(-m - 3), -1}) != h) {
    r.pass = false;
    r.failure = "h_" + std::to_string(m) + "(-m-3-n) != h_" + std::to_string(m) + "(n)";
  }
  return r;
}

}  // namespace hillpoly
