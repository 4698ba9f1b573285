// Seeded property suites: each property runs on at least 100 generated cases.
#include <doctest.h>

#include <algorithm>

#include "hillpoly/euler.hpp"
#include "hillpoly/families.hpp"
#include "hillpoly/hills.hpp"
#include "hillpoly/rootloc.hpp"
#include "hillpoly/sturm.hpp"
#include "hillpoly/weyl.hpp"
#include "oracles.hpp"

using namespace hillpoly;
using oracle::Gen;
using oracle::q;

namespace {

constexpr int kCases = 100;

/// Q with Q(0) = 1 and Q(-1) != 0.
Poly random_defect_zero(Gen& g, int max_degree) {
  for (;;) {
    Poly p = g.poly(max_degree, 6);
    if (p.coeff(0) == 0) continue;
    p = normalize_at_zero(p);
    if (p(Rational(-1)) != 0) return p;
  }
}

/// Product of (s+1/2)^2 + r^2 factors and optionally (s + 1/2); symmetric about -1/2.
Poly random_on_line(Gen& g) {
  Poly p(1);
  const int quads = g.integer(0, 3);
  for (int i = 0; i < quads; ++i) {
    const Rational r = g.rational(5, 4);
    p *= Poly{q(1, 4) + r * r, 1, 1};
  }
  if (quads == 0 || g.integer(0, 1)) p *= Poly{q(1, 2), 1};
  return p;
}

}  // namespace

TEST_CASE("nabla product rule") {
  Gen g(101);
  for (int i = 0; i < kCases; ++i) {
    const Poly p = g.poly(7), r = g.poly(7);
    CHECK(backward_diff(p * r) == backward_diff(p) * r + shift(p, -1) * backward_diff(r));
    CHECK(forward_diff(p * r) == forward_diff(p) * shift(r, 1) + p * forward_diff(r));
  }
}

TEST_CASE("reverse is an involution when p(0) != 0") {
  Gen g(102);
  for (int i = 0; i < kCases; ++i) {
    Poly p = g.poly(9);
    if (p.coeff(0) == 0) p += 1;
    CHECK(reverse(reverse(p)) == p);
  }
}

TEST_CASE("shift round trip and composition oracle") {
  Gen g(103);
  for (int i = 0; i < kCases; ++i) {
    const Poly p = g.poly(10);
    const Rational a = g.rational();
    CHECK(shift(shift(p, a), -a) == p);
    const Rational x = g.rational();
    CHECK(shift(p, a)(x) == oracle::eval(p.coeffs(), x + a));
  }
}

TEST_CASE("division and gcd") {
  Gen g(104);
  for (int i = 0; i < kCases; ++i) {
    const Poly a = g.poly(9), b = g.poly(5), c = g.poly(3);
    const auto [quot, rem] = divrem(a, b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
    const Poly d = gcd(a * c, b * c);
    CHECK(divrem(a * c, d).second.is_zero());
    CHECK(divrem(b * c, d).second.is_zero());
    CHECK(divrem(d, monic(c)).second.is_zero());
    CHECK(d.leading() == 1);
  }
}

TEST_CASE("discrete taylor reconstruction up to degree 30") {
  Gen g(105);
  for (int i = 0; i < kCases; ++i) {
    const Poly p = g.poly(30);
    const auto c = discrete_taylor_at_minus_one(p);
    CHECK(from_discrete_taylor(c) == p);
  }
}

TEST_CASE("sturm counts against roots-by-construction") {
  Gen g(106);
  for (int i = 0; i < kCases; ++i) {
    const int real = g.integer(0, 6);
    const auto roots = g.distinct(real);
    Poly p(oracle::from_roots(roots));
    const int quads = g.integer(real == 0 ? 1 : 0, (8 - real) / 2);
    for (int k = 0; k < quads; ++k) {
      const Rational c = g.rational(), r = g.rational(4) + q(1, 7);
      p *= Poly{c * c + r * r, -2 * c, 1};  // (x - c)^2 + r^2
    }
    p *= Rational(g.integer(1, 5) * (g.integer(0, 1) ? 1 : -1));
    const auto ninf = ExtendedRational::minus_infinity(), pinf = ExtendedRational::plus_infinity();
    CHECK(sturm_root_count(p, ninf, pinf) == real);
    const Rational cut = g.rational();
    const int below = static_cast<int>(std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return r <= cut; }));
    CHECK(sturm_root_count(p, ninf, cut) == below);
    CHECK(sturm_root_count_open(p, ninf, cut) == static_cast<int>(std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return r < cut; })));
  }
}

TEST_CASE("squarefree decomposition multiplicities") {
  Gen g(107);
  for (int i = 0; i < kCases; ++i) {
    const auto roots = g.distinct(g.integer(1, 4));
    std::vector<Rational> all;
    std::vector<int> mult;
    for (const auto& r : roots) {
      mult.push_back(g.integer(1, 3));
      for (int k = 0; k < mult.back(); ++k) all.push_back(r);
    }
    const auto f = squarefree_decomposition(Poly(oracle::from_roots(all)) * g.integer(1, 9));
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const int m = mult[k];
      REQUIRE(static_cast<int>(f.size()) >= m);
      CHECK(f[static_cast<std::size_t>(m - 1)](roots[k]) == 0);
    }
  }
}

TEST_CASE("euler round trip on defect-0 polynomials") {
  Gen g(201);
  for (int i = 0; i < kCases; ++i) {
    const Poly qp = random_defect_zero(g, 10);
    const EulerPair pair = euler_transform(qp);
    CHECK(pair.defect == 0);
    CHECK(pair.p.coeffs() == oracle::euler_numerator(qp.coeffs()));
    CHECK(inverse_euler(pair.p) == qp);
  }
  for (int m = 0; m <= 30; ++m) CHECK(inverse_euler(euler_transform(q_poly(m)).p) == q_poly(m));
}

TEST_CASE("defect equals discrete order and ord F(1/t) = f + 1") {
  Gen g(202);
  for (int i = 0; i < kCases; ++i) {
    const int a = g.integer(0, 4);
    Poly base = random_defect_zero(g, 5);
    while (base(Rational(-a - 1)) == 0) base = random_defect_zero(g, 5);
    const Poly qp = normalize_at_zero(base * rising_basis(a));
    const EulerPair pair = euler_transform(qp);
    CHECK(defect(qp) == a);
    CHECK(discrete_order_at_minus_one(qp) == a);
    CHECK(pair.defect == a);
    CHECK(inverse_euler(pair.p) == backward_diff(qp, a));
    CHECK(reciprocal_series_order(pair) == a + 1);
  }
}

TEST_CASE("popoviciu on random polynomials") {
  Gen g(203);
  for (int i = 0; i < kCases; ++i) {
    const Poly qp = random_defect_zero(g, 10);
    CHECK(popoviciu_check(qp, 25).pass);
  }
}

TEST_CASE("hecke biconditional sides agree") {
  Gen g(204);
  int controls = 0;
  for (int i = 0; i < kCases; ++i) {
    Poly qp;
    if (i % 2 == 0) {
      // R symmetric about -(f+1)/2 times h_f keeps Q symmetric with defect f
      const int f = g.integer(0, 3);
      qp = normalize_at_zero(shift(random_on_line(g), q(f, 2)) * rising_basis(f));
      CHECK(defect(qp) == f);
    } else {
      do qp = random_defect_zero(g, 6);
      while (hecke_symmetry_check(qp).symmetric());
    }
    const auto r = hecke_symmetry_check(qp);
    CHECK(r.sides_agree());
    if (i % 2 == 0) CHECK(r.q_side_sign == 1);
    controls += i % 2 == 1 && !r.symmetric();
  }
  CHECK(controls == kCases / 2);
}

TEST_CASE("Q_m arithmetic properties") {
  for (int m = 0; m <= 30; ++m) {
    const Poly qm = q_poly(m);
    CHECK(q_poly_via_nabla(m) == q_poly_via_inverse_euler(m));
    CHECK(compose(qm, Poly{-1, -1}) == (m % 2 == 0 ? qm : -qm));
  }
  Gen g(301);
  for (int i = 0; i < kCases; ++i) {
    const int m = g.integer(0, 30);
    const Rational n = g.integer(-60, 60);
    CHECK(is_integer(q_poly(m)(n)));
  }
  int cases = 0;
  for (int m = 0; m <= 30; ++m)
    for (int j = 0; j <= m; ++j, ++cases) CHECK(g_poly(m).coeff(j) == h_poly(j - 1)(Rational(m - j)));
  CHECK(cases >= kCases);
}

TEST_CASE("hahn grid") {
  int cases = 0;
  for (const Rational& a : {Rational(0), Rational(1), Rational(2), q(1, 2)})
    for (const Rational& b : {Rational(0), Rational(1), Rational(2), q(1, 2)})
      for (const Rational& n : {Rational(-2), Rational(-1), Rational(5), Rational(7)})
        for (int m = 0; m <= 6; ++m, ++cases) {
          const Poly h = hahn_explicit(m, a, b, n);
          CHECK(h == hahn_rodrigues(m, a, b, n));
          const HahnScheme s = hahn_scheme(a, b, n);
          CHECK((s.sigma * forward_diff(backward_diff(h)) + s.tau * forward_diff(h) + s.lambda(m) * h).is_zero());
        }
  CHECK(cases >= kCases);
}

TEST_CASE("jacobi limit of hahn") {
  Gen g(302);
  for (int i = 0; i < kCases; ++i) {
    // N^{-m} h_m(N x, N) at growing N approaches P_m(2x-1); check the exact
    // leading behaviour through the top N-coefficient of each n^j term
    const int m = g.integer(0, 5);
    const Rational a = g.integer(0, 3), b = q(g.integer(0, 4), 2);
    std::vector<Rational> nodes, ys;
    const int j = g.integer(0, m);
    for (int k = 0; k <= m; ++k) {
      nodes.emplace_back(m + 3 + 5 * k);
      ys.push_back(hahn_explicit(m, a, b, nodes.back()).coeff(j));
    }
    const Poly cj = interpolate(nodes, ys);
    CHECK(cj.degree() <= Degree(m - j));
    CHECK(cj.coeff(m - j) == compose(jacobi(m, a, b), Poly{-1, 2}).coeff(j));
  }
}

TEST_CASE("hill invariants") {
  const auto hills = enumerate_hills(13);
  REQUIRE(hills.size() >= static_cast<std::size_t>(kCases));
  for (const auto& hill : hills) {
    const Poly qh = hill_q(hill);
    const Poly p = hill_dual(hill);
    CHECK(qh.deg() == hill.volume() - hill.width());
    CHECK(p.deg() == hill.dual_degree());
    CHECK(reverse(p) == p);
    CHECK(compose(qh, Poly{-1, -1}) == (hill.dual_degree() % 2 == 0 ? qh : -qh));
    CHECK(boundary_by_min(hill) == boundary(hill));
    const Poly h = hill_poly(hill).h;
    CHECK(hill_poly(boundary_by_min(hill)).h == gcd(h, shift(h, -1)));
  }
}

TEST_CASE("boundary chain lands on successive lines") {
  const auto hills = enumerate_hills(10);
  int cases = 0;
  for (const auto& hill : hills) {
    Hill cur = hill;
    Poly p(1);
    for (int a = hill.width(); a >= 1; --a, ++cases) {
      const Hill next = boundary(cur);
      const Poly qa = exact_div(backward_diff(hill_poly(cur).h * p), hill_poly(next).h);
      CHECK(critical_line_check(qa, a).on_line());
      cur = next;
      p = qa;
    }
    CHECK(p == hill_poly(hill).h(Rational(0)) * hill_q(hill));
  }
  CHECK(cases >= kCases);
}

TEST_CASE("undouble inverts double") {
  Gen g(401);
  for (int i = 0; i < kCases; ++i) {
    std::vector<int> lambda(static_cast<std::size_t>(g.integer(1, 6)));
    for (auto& x : lambda) x = g.integer(1, 5);
    std::sort(lambda.begin(), lambda.end());
    for (const Parity eps : {Parity::even, Parity::odd}) {
      const auto [back, e] = undouble(double_diagram(YoungDiagram(lambda), eps));
      CHECK(back.lambda() == lambda);
      CHECK(e == eps);
    }
  }
}

TEST_CASE("critical line soundness") {
  Gen g(501);
  for (int i = 0; i < 2 * kCases; ++i) {
    const Poly p = random_on_line(g);
    const auto cert = critical_line_check(p, 1);
    CHECK(cert.on_line());
    int total = 0;
    for (std::size_t k = 0; k < cert.multiplicities.size(); ++k) total += cert.multiplicities[k] * static_cast<int>(k + 1);
    CHECK(total == (cert.even_part.is_constant() ? 0 : cert.even_part.deg()));
    Rational c = g.rational(6, 3);
    if (c == q(-1, 2)) c = 1;
    const Poly off = p * Poly{-c, 1} * Poly{1 + c, 1};
    CHECK_FALSE(critical_line_check(off, 1).on_line());
  }
}

TEST_CASE("families on the line and on the negative axis") {
  for (int m = 0; m <= 25; ++m) {
    CHECK(critical_line_check(q_poly(m), 1).on_line());
    CHECK(negative_simple_roots_check(g_poly(m)).pass);
  }
  for (int k = 0; k <= 12; ++k) {
    const auto cert = critical_line_check(eulerian_family(k).q, 1);
    CHECK(cert.on_line());
    CHECK((cert.odd_flag ? 1 : 0) + 2 * cert.real_root_count == k);
  }
}

TEST_CASE("weyl product forms and tableaux oracle") {
  for (int ell = 2; ell <= 22; ++ell) CHECK(weyl_dim_poly_by_roots(ell) == weyl_dim_poly_simplified(ell));
  Gen g(601);
  for (int i = 0; i < kCases; ++i) {
    const int ell = g.integer(2, 10), n = g.integer(0, 8);
    CHECK(weyl_dim_poly(ell)(Rational(n)) == Rational(oracle::ssyt_two_row_rectangle(n, ell + 1)));
  }
  for (int m = 0; m <= 20; ++m) {
    const EulerPair pair = euler_transform(h_poly(m));
    CHECK(pair.p == g_poly(m));
    CHECK(pair.d + 1 == 2 * m + 3);
  }
}
