#ifndef HILLPOLY_WEYL_HPP
#define HILLPOLY_WEYL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hillpoly/poly.hpp"

namespace hillpoly {

/// Root system A_ℓ in ε-coordinates ε_1 .. ε_{ℓ+1}.
struct RootSystemA {
  int ell = 0;
  std::vector<std::pair<int, int>> positive_roots;  // (i, j), α_ij = ε_i - ε_j
  std::vector<Rational> rho;                        // ρ_i = (ℓ + 2 - 2i)/2
  std::vector<Rational> varpi2;                     // ε_1 + ε_2 - 2/(ℓ+1) Σ ε_j

  /// (v | α_ij) for a vector in ε-coordinates.
  Rational pair_with_root(const std::vector<Rational>& v, std::pair<int, int> root) const;
};

/// Throws std::invalid_argument for ell < 2.
RootSystemA root_system_a(int ell);

/// dim L(n ϖ₂) = ∏_{α>0} (1 + (ϖ₂|α)/(ρ|α) n) as a polynomial in n.
/// Throws std::logic_error if the product over roots differs from
/// ∏_{j=1}^{ℓ-1} (1 + n/j) ∏_{j=2}^{ℓ} (1 + n/j).
Poly weyl_dim_poly(int ell);

/// Product over positive roots only.
Poly weyl_dim_poly_by_roots(int ell);
/// The simplified double product only.
Poly weyl_dim_poly_simplified(int ell);

/// Dimension of the Plücker ambient space, d_m = (m+3)(m+2)/2.
int plucker_dimension(int m);

struct HirzebruchResult {
  bool pass = false;
  int m = 0;
  int plucker_dimension = 0;
  Poly weyl;
  Poly hilbert;  // h_m
};

/// weyl_dim_poly(m+2) == h_m.
HirzebruchResult verify_hirzebruch(int m);

struct IntegralityResult {
  bool pass = true;
  std::optional<std::string> failure;
};

/// Over integers n in [n_lo, n_hi]: h_m(n) is an integer, and it vanishes
/// exactly at n = -1 .. -m-2. Also checks h_m(-m-3-n) = h_m(n) as a
/// polynomial identity.
IntegralityResult integrality_scan(int m, int n_lo, int n_hi);

}  // namespace hillpoly

#endif  // HILLPOLY_WEYL_HPP
