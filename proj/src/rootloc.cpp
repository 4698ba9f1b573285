#include "hillpoly/rootloc.hpp"

#include <stdexcept>

#include "hillpoly/linsolve.hpp"
#include "hillpoly/sturm.hpp"

namespace hillpoly {

LineCertificate critical_line_check(const Poly& q, int a) {
  if (q.is_zero()) throw std::invalid_argument("critical_line_check: zero polynomial");
  const Poly reflected = compose(q, Poly{Rational(-a), -1});
  LineCertificate cert;
  if (reflected == q) {
    cert.symmetry_sign = 1;
  } else if (reflected == -q) {
    cert.symmetry_sign = -1;
  } else {
    throw std::invalid_argument("critical_line_check: Q(-a-s) != ±Q(s), the line test does not apply");
  }
  // s = (u - a)/2
  Rational shift_by(-a, 2);
  shift_by.canonicalize();
  const Poly r = compose(q, Poly{shift_by, Rational(1, 2)});
  cert.odd_flag = cert.symmetry_sign < 0;
  std::vector<Rational> s_coeffs;
  for (std::size_t k = cert.odd_flag ? 1 : 0; k < r.size(); k += 2) s_coeffs.push_back(r.coeffs()[k]);
  cert.even_part = Poly(std::move(s_coeffs));

  const int deg_s = cert.even_part.deg();
  if (deg_s > 0) {
    const auto factors = squarefree_decomposition(cert.even_part);
    cert.multiplicities.assign(factors.size(), 0);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].is_constant()) continue;
      const int n = sturm_root_count(factors[i], ExtendedRational::minus_infinity(), Rational(0));
      cert.multiplicities[i] = n;
      cert.distinct_real_roots += n;
      cert.real_root_count += n * static_cast<int>(i + 1);
    }
  }
  if (cert.real_root_count != deg_s) {
    cert.verdict = LineVerdict::off_line;
    const int positive = sturm_root_count(cert.even_part, Rational(0), ExtendedRational::plus_infinity());
    cert.witness = "S(w) = " + to_string(cert.even_part, 'w') + " has " + std::to_string(cert.real_root_count) +
                   " of " + std::to_string(deg_s) + " roots in (-inf, 0]; " + std::to_string(positive) +
                   " distinct positive root(s)";
  }
  return cert;
}

NegativeRootsResult negative_simple_roots_check(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("negative_simple_roots_check: zero polynomial");
  NegativeRootsResult res;
  res.degree = p.deg();
  const Poly g = gcd(p, derivative(p));
  res.simple = g.is_constant();
  res.negative_root_count =
      p.is_constant() ? 0 : sturm_root_count_open(p, ExtendedRational::minus_infinity(), Rational(0));
  res.pass = res.simple && res.negative_root_count == res.degree;
  if (!res.simple) {
    res.witness = "repeated factor gcd(P, P') = " + to_string(g, 't');
  } else if (!res.pass) {
    res.witness = "only " + std::to_string(res.negative_root_count) + " of " + std::to_string(res.degree) +
                  " roots are real and negative";
  }
  return res;
}

DiffEqSolution diffeq_search(const Poly& q, int h) {
  if (h < 1) throw std::invalid_argument("diffeq_search: order h >= 1");
  if (q.is_zero()) throw std::invalid_argument("diffeq_search: zero polynomial");
  DiffEqSolution out;
  out.order = h;

  std::vector<Poly> columns;  // s^j ∇^i Q, (i, j) with j <= i
  std::vector<std::pair<int, int>> index;
  Poly nabla_i = q;
  for (int i = 0; i <= h; ++i) {
    for (int j = 0; j <= i; ++j) {
      columns.push_back(Poly::monomial(1, j) * nabla_i);
      index.emplace_back(i, j);
    }
    nabla_i = backward_diff(nabla_i);
  }
  int rows = 1;
  for (const auto& c : columns)
    if (!c.is_zero()) rows = std::max(rows, c.deg() + 1);
  RationalMatrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols; ++c)
    for (int r = 0; r < rows; ++r) m(r, c) = columns[static_cast<std::size_t>(c)].coeff(r);

  const auto basis = null_space(m);
  out.nullspace_dimension = static_cast<int>(basis.size());

  auto part = [&](const std::vector<Rational>& v, int which) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(which) + 1);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (index[k].first == which) coeffs[static_cast<std::size_t>(index[k].second)] = v[k];
    return Poly(std::move(coeffs));
  };
  auto combine = [](const std::vector<Rational>& a, const std::vector<Rational>& b, int c) {
    std::vector<Rational> r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += c * b[k];
    return r;
  };

  const std::vector<Rational>* top = nullptr;
  const std::vector<Rational>* with_p0 = nullptr;
  std::optional<std::vector<Rational>> chosen;
  for (const auto& v : basis) {
    const bool has_top = !part(v, h).is_zero();
    const bool has_p0 = !part(v, 0).is_zero();
    if (has_top && has_p0) {
      chosen = v;
      break;
    }
    if (has_top && !top) top = &v;
    if (has_p0 && !with_p0) with_p0 = &v;
  }
  if (!chosen && top) {
    chosen = *top;
    if (with_p0) {
      // p_h(top + c·with_p0) vanishes for at most one c
      for (int c : {1, 2}) {
        auto candidate = combine(*top, *with_p0, c);
        if (!part(candidate, h).is_zero()) {
          chosen = std::move(candidate);
          break;
        }
      }
    }
  }
  if (!chosen) return out;

  std::vector<Poly> coeffs;
  for (int i = 0; i <= h; ++i) coeffs.push_back(part(*chosen, i));
  const Rational lead = coeffs.back().leading();
  for (auto& p : coeffs) p /= lead;
  out.degenerate = coeffs.front().is_zero();
  out.coefficients = std::move(coeffs);
  return out;
}

}  // namespace hillpoly
