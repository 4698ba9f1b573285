#include <doctest.h>

#include "hillpoly/families.hpp"
#include "hillpoly/weyl.hpp"
#include "oracles.hpp"

using namespace hillpoly;

TEST_CASE("root system data") {
  const RootSystemA a3 = root_system_a(3);
  CHECK(a3.positive_roots.size() == 6);
  CHECK(a3.pair_with_root(a3.varpi2, {1, 2}) == 0);
  CHECK(a3.pair_with_root(a3.varpi2, {2, 3}) == 1);
  CHECK(a3.pair_with_root(a3.rho, {1, 4}) == 3);
  CHECK_THROWS_AS(root_system_a(1), std::invalid_argument);
}

TEST_CASE("weyl dimension polynomials") {
  CHECK(weyl_dim_poly(2) == Poly{2, 3, 1} / 2);
  CHECK(weyl_dim_poly(3) == h_poly(1));
  for (int ell = 2; ell <= 9; ++ell) {
    const Poly dim = weyl_dim_poly(ell);
    CHECK(dim.deg() == 2 * ell - 2);
    for (int n = 0; n <= 6; ++n) CHECK(dim(Rational(n)) == Rational(oracle::ssyt_two_row_rectangle(n, ell + 1)));
  }
}

TEST_CASE("hirzebruch and integrality") {
  const auto r0 = verify_hirzebruch(0);
  CHECK(r0.pass);
  CHECK(r0.plucker_dimension == 3);
  for (int m = 0; m <= 20; ++m) CHECK(verify_hirzebruch(m).pass);
  CHECK(integrality_scan(2, -10, 10).pass);
  CHECK(compose(h_poly(1), Poly{-4, -1}) == h_poly(1));
  const Rational v = h_poly(3)(Rational(5));
  CHECK(is_integer(v));
  CHECK(v > 0);
  CHECK(v == weyl_dim_poly(5)(Rational(5)));
}
