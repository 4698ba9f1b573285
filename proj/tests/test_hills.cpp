#include <doctest.h>

#include <set>

#include "hillpoly/euler.hpp"
#include "hillpoly/families.hpp"
#include "hillpoly/hills.hpp"
#include "oracles.hpp"

using namespace hillpoly;
using oracle::q;

TEST_CASE("hill validation and accessors") {
  CHECK_THROWS_AS(Hill({2, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Hill({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Hill({0}), std::invalid_argument);
  const Hill h({1, 2, 2, 1});
  CHECK(h.width() == 4);
  CHECK(h.height() == 2);
  CHECK(h.volume() == 6);
  CHECK(h.dual_degree() == 2);
  CHECK(Hill({1, 3, 1}).height() == 2);
}

TEST_CASE("doubles") {
  CHECK(double_diagram(YoungDiagram({1, 2}), Parity::even) == Hill({1, 2, 2, 1}));
  CHECK(double_diagram(YoungDiagram({1, 2}), Parity::odd) == Hill({1, 2, 1}));
  CHECK(double_diagram(YoungDiagram({3}), Parity::odd) == Hill({3}));
  const auto [lambda, eps] = undouble(Hill({1, 2, 1}));
  CHECK(lambda == YoungDiagram({1, 2}));
  CHECK(eps == Parity::odd);
  CHECK_THROWS_AS(YoungDiagram({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(undouble(Hill()), std::invalid_argument);
}

TEST_CASE("textual forms") {
  CHECK(parse_hill("1,2,2,1") == Hill({1, 2, 2, 1}));
  CHECK(parse_hill("young:1,2+") == Hill({1, 2, 2, 1}));
  CHECK(parse_hill("young:1,2-") == Hill({1, 2, 1}));
  CHECK(parse_hill("").empty());
  CHECK(to_string(Hill({1, 3, 1})) == "1,3,1");
  CHECK_THROWS_AS(parse_hill("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hill("young:1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hill("2,1"), std::invalid_argument);
}

TEST_CASE("hill polynomials") {
  CHECK(hill_poly(Hill({1})).h == Poly{1, 1});
  CHECK(hill_poly(Hill({1})).h_tilde == Poly{1, 1});
  CHECK(hill_poly(Hill({1, 2, 2, 1})).h_tilde == h_poly(2));
  CHECK(hill_poly(Hill({4})).h_tilde == pow(Poly{1, 1}, 4));
  CHECK(hill_q(Hill({1})) == Poly(1));
  CHECK(hill_q(Hill({1, 2, 2, 1})) == q_poly(2));
  CHECK(hill_q(Hill({2})) == Poly{1, 2});
  CHECK(hill_dual(Hill({1})) == Poly(1));
  CHECK(hill_dual(Hill({1, 2, 2, 1})) == g_poly(2));
  CHECK(hill_dual(Hill({3})) == Poly{1, 4, 1});
  for (int m = 0; m <= 6; ++m) {
    std::vector<int> mu(static_cast<std::size_t>(m + 2), 2);
    mu.front() = mu.back() = 1;
    CHECK(hill_q(Hill(mu)) == q_poly(m));
    CHECK(hill_dual(Hill(mu)) == g_poly(m));
  }
}

TEST_CASE("hill symmetry sign is (-1)^deg Q") {
  // the width-parity form is false: (1,1,1) has Q = 1 and odd width
  const Hill h({1, 1, 1});
  const Poly qmu = hill_q(h);
  CHECK(qmu == Poly(1));
  CHECK(compose(qmu, Poly{-1, -1}) != -qmu);
  for (const auto& hill : enumerate_hills(10)) {
    const Poly qh = hill_q(hill);
    CHECK(compose(qh, Poly{-1, -1}) == (hill.dual_degree() % 2 == 0 ? qh : -qh));
  }
}

TEST_CASE("boundary operator") {
  CHECK(boundary(Hill({1, 2, 2, 1})) == Hill({1, 2, 1}));
  CHECK(boundary(Hill({1, 2, 1})) == Hill({1, 1}));
  CHECK(boundary(Hill({1, 1})) == Hill({1}));
  CHECK(boundary(Hill({1})).empty());
  const Poly h = hill_poly(Hill({1, 2, 2, 1})).h;
  CHECK(gcd(h, shift(h, -1)) == Poly(oracle::from_roots({-1, -2, -2, -3})));
}

TEST_CASE("phi factors") {
  const PhiFactors one = phi_factors(Hill({1}));
  CHECK(one.plus == Poly{1, 1});
  CHECK(one.minus == Poly{0, 1});
  const PhiFactors two = phi_factors(Hill({1, 1}));
  CHECK(two.plus == Poly{2, 1});
  CHECK(two.minus == Poly{0, 1});
  const PhiFactors big = phi_factors(Hill({1, 2, 2, 1}));
  CHECK(big.plus == Poly(oracle::from_roots({-3, -4})));
  CHECK(big.minus == Poly(oracle::from_roots({0, -1})));
  CHECK(reflect_phi_plus(big, 4) == big.minus);
  // the printed reflection x -> a+1-x does not hold
  CHECK(compose(big.plus, Poly{5, -1}) != big.minus);
}

TEST_CASE("enumeration") {
  const auto two = enumerate_hills(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == Hill({1}));
  CHECK(two[1] == Hill({2}));
  CHECK(two[2] == Hill({1, 1}));
  const auto three = enumerate_hills(3);
  REQUIRE(three.size() == 5);
  CHECK(three[3] == Hill({3}));
  CHECK(three[4] == Hill({1, 1, 1}));

  for (int v = 1; v <= 12; ++v) {
    const auto lib = enumerate_hills(v);
    std::set<std::vector<int>> a;
    for (const auto& h : lib) a.insert(h.mu());
    const auto brute = oracle::brute_force_hills(v);
    std::set<std::vector<int>> b(brute.begin(), brute.end());
    CHECK(a.size() == lib.size());
    CHECK(a == b);
  }
  CHECK(enumerate_hills(12).size() == 98);
}
