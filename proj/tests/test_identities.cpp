#include <doctest.h>

#include <set>

#include "hillpoly/families.hpp"
#include "hillpoly/identities.hpp"
#include "hillpoly/series.hpp"

using namespace hillpoly;

TEST_CASE("registry") {
  const auto& reg = identity_registry();
  std::set<std::string> names;
  for (const auto& info : reg) {
    CHECK_FALSE(info.description.empty());
    names.insert(info.name);
  }
  CHECK(names.size() == reg.size());
  CHECK(names.count("g-from-f-shift"));
  CHECK(names.count("Q-equals-hahn"));
  CHECK(names.count("hahn-orthogonality"));
  CHECK_THROWS_AS(verify_identity("no-such-identity", 5), UnknownIdentity);
  CHECK_THROWS_AS(verify_identity("hirzebruch", 0), std::invalid_argument);
}

TEST_CASE("named checkers") {
  const auto shift = verify_identity("g-from-f-shift", 30);
  CHECK(shift.pass);
  CHECK(shift.cases == 31);
  CHECK(verify_identity("Q-equals-hahn", 20).pass);
  CHECK(verify_identity("hirzebruch", 15).pass);
  const auto orth = verify_identity("hahn-orthogonality", 5);
  CHECK(orth.pass);
  CHECK_FALSE(orth.notes.empty());
}

TEST_CASE("operator assembly index") {
  // prod_{j=2}^{i+1}(1 + θ/j) applied to 1/(1-t)^{m+3} reproduces Σ h_m(n) tⁿ
  // for i = m; the index i = m+1 gives a different series
  const int order = 12;
  for (int m = 0; m <= 4; ++m) {
    auto apply = [&](int i) {
      Poly s = series_one_minus_t_inverse_power(m + 3, order);
      for (int j = 2; j <= i + 1; ++j) s = truncate(s + theta(s) / j, order);
      return s;
    };
    CHECK(apply(m) == value_series(h_poly(m), order));
    CHECK(apply(m + 1) != value_series(h_poly(m), order));
  }
}
