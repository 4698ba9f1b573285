#include <doctest.h>

#include "hillpoly/families.hpp"
#include "hillpoly/hills.hpp"
#include "hillpoly/rootloc.hpp"
#include "oracles.hpp"

using namespace hillpoly;
using oracle::q;

TEST_CASE("critical line examples") {
  const auto lin = critical_line_check(Poly{1, 2}, 1);
  CHECK(lin.on_line());
  CHECK(lin.odd_flag);
  CHECK(lin.symmetry_sign == -1);

  const auto q2 = critical_line_check(Poly{1, q(5, 2), q(5, 2)}, 1);
  CHECK(q2.on_line());
  CHECK(q2.even_part == Poly{3, 5} / 8);

  const auto off = critical_line_check(Poly{-2, 1, 1}, 1);
  CHECK_FALSE(off.on_line());
  CHECK(off.even_part == Poly{-9, 1} / 4);
  REQUIRE(off.witness);
  CHECK(off.witness->find("1 distinct positive") != std::string::npos);

  CHECK_THROWS_AS(critical_line_check(Poly{1, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(critical_line_check(Poly(), 1), std::invalid_argument);
}

TEST_CASE("critical line with multiplicities and other lines") {
  // ((s+1/2)^2 + 1)^2 (s+1/2)
  const Poly base = Poly{q(5, 4), 1, 1};
  const auto cert = critical_line_check(base * base * Poly{q(1, 2), 1}, 1);
  CHECK(cert.on_line());
  CHECK(cert.real_root_count == 2);
  CHECK(cert.distinct_real_roots == 1);
  REQUIRE(cert.multiplicities.size() == 2);
  CHECK(cert.multiplicities[1] == 1);
  // a double real root at the line's real point
  CHECK(critical_line_check(Poly{q(1, 4), 1, 1}, 1).on_line());
  // line Re s = -3/2 and Re s = 1/2
  CHECK(critical_line_check(Poly{3, 2}, 3).on_line());
  CHECK(critical_line_check(Poly{-1, 2}, -1).on_line());
  CHECK(critical_line_check(shift(hahn_explicit(3, 1, 1, -2), 0), 3).on_line());
}

TEST_CASE("negative simple roots") {
  CHECK(negative_simple_roots_check(Poly{1, 1}).pass);
  CHECK(negative_simple_roots_check(Poly{1, 3, 1}).pass);
  const auto sq = negative_simple_roots_check(Poly{1, 2, 1});
  CHECK_FALSE(sq.pass);
  CHECK_FALSE(sq.simple);
  const auto complex = negative_simple_roots_check(Poly{1, 1, 1});
  CHECK_FALSE(complex.pass);
  CHECK(complex.simple);
  CHECK(negative_simple_roots_check(Poly(1)).pass);
  CHECK_FALSE(negative_simple_roots_check(Poly{-1, 1}).pass);
  CHECK_FALSE(negative_simple_roots_check(Poly{0, 1}).pass);
  CHECK_THROWS_AS(negative_simple_roots_check(Poly()), std::domain_error);
}

namespace {

Poly apply_operator(const std::vector<Poly>& p, const Poly& qpoly) {
  Poly acc;
  Poly nabla = qpoly;
  for (const auto& pi : p) {
    acc += pi * nabla;
    nabla = backward_diff(nabla);
  }
  return acc;
}

}  // namespace

TEST_CASE("difference equation search") {
  const auto lin = diffeq_search(Poly{1, 2}, 1);
  REQUIRE(lin.coefficients);
  CHECK_FALSE(lin.degenerate);
  CHECK((*lin.coefficients)[0] == Poly(-1));
  CHECK((*lin.coefficients)[1] == Poly{q(1, 2), 1});
  CHECK(apply_operator(*lin.coefficients, Poly{1, 2}).is_zero());

  const auto one = diffeq_search(Poly(1), 1);
  REQUIRE(one.coefficients);
  CHECK(one.degenerate);
  CHECK((*one.coefficients)[0].is_zero());

  const Poly q2 = q_poly(2);
  const auto two = diffeq_search(q2, 2);
  CHECK(two.nullspace_dimension >= 1);
  if (two.coefficients) {
    CHECK(apply_operator(*two.coefficients, q2).is_zero());
    CHECK((*two.coefficients)[2].leading() == 1);
  }
  CHECK_THROWS_AS(diffeq_search(q2, 0), std::invalid_argument);
}
