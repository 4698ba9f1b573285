#ifndef HILLPOLY_FAMILIES_HPP
#define HILLPOLY_FAMILIES_HPP

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hillpoly/poly.hpp"

namespace hillpoly {

// ---------------------------------------------------------------------------
// Terminating hypergeometric sums
// ---------------------------------------------------------------------------

/// pFq(a_1..a_p; b_1..b_q; x) for a series that terminates because some upper
/// parameter is a nonpositive integer -K. Throws std::invalid_argument when no
/// upper parameter terminates the series, and std::domain_error when a lower
/// parameter is a nonpositive integer -j with j < K (a pole before
/// termination).
Rational hypergeometric_terminating(std::span<const Rational> upper, std::span<const Rational> lower,
                                    const Rational& x);

/// Symbolic variant: upper parameters may be polynomials (such as -n in the
/// Hahn 3F2) and the argument may be a polynomial. Termination is decided by
/// the constant upper parameters.
Poly hypergeometric_terminating(std::span<const Poly> upper, std::span<const Rational> lower,
                                const Poly& x);

// ---------------------------------------------------------------------------
// Jacobi family
// ---------------------------------------------------------------------------

/// P_n^{(α,β)}(x) = 2^{-n} Σ_k C(n+α, k) C(n+β, n-k) (x-1)^{n-k} (x+1)^k.
Poly jacobi(int n, const Rational& alpha, const Rational& beta);

/// C(n+α, n) 2F1(-n, n+α+β+1; α+1; (1-x)/2). Requires α+1 to avoid the
/// nonpositive integers below n.
Poly jacobi_hypergeometric(int n, const Rational& alpha, const Rational& beta);

inline Poly legendre(int n) { return jacobi(n, 0, 0); }

/// C_n^λ = P_n^{(λ-1/2, λ-1/2)}. This normalization differs from the usual
/// Gegenbauer one by a constant factor.
Poly gegenbauer(int n, const Rational& lambda);

// ---------------------------------------------------------------------------
// Hahn family
// ---------------------------------------------------------------------------

/// Ratio of two polynomials.
struct RationalFunction {
  Poly num;
  Poly den;
};

/// Data of the difference-Rodrigues construction for (α, β, N):
///   σ(x) = x (N+α-x),  τ(x) = -(2+α+β) x + (N-1)(β+1),
///   λ_n = -n τ' - n(n-1)/2 σ'',  B_n = (-1)^n / n!.
/// The weight ρ is not stored; it enters only through rho_ratio.
struct HahnScheme {
  Rational alpha;
  Rational beta;
  Rational n_param;
  Poly sigma;
  Poly tau;

  Rational lambda(int n) const;
  Rational normalizer(int n) const;
};

HahnScheme hahn_scheme(const Rational& alpha, const Rational& beta, const Rational& n_param);

/// ρ(x+j)/ρ(x) for ρ(x) = Γ(N+α-x)Γ(x+β+1) / (Γ(x+1)Γ(N-x)).
RationalFunction rho_ratio(int j, const Rational& alpha, const Rational& beta, const Rational& n_param);

/// h_m^{(α,β)}(n, N) from the terminating 3F2 with prefactor
/// (-1)^m (N-1)! (β+1)_m / (m! (N-m-1)!). The factorial and Pochhammer ratios
/// are cancelled into rising/falling products, so the result is the
/// polynomial continuation in α, β, N and never has a pole.
Poly hahn_explicit(int m, const Rational& alpha, const Rational& beta, const Rational& n_param);

/// Literal 3F2 route through hypergeometric_terminating; throws
/// std::domain_error at the lower-parameter poles the cancelled form avoids.
Poly hahn_explicit_3f2(int m, const Rational& alpha, const Rational& beta, const Rational& n_param);

/// (B_m/ρ(x)) Δ^m[ρ(x) ∏_{k<m} σ(x-k)] via shift ratios of ρ. Throws
/// std::domain_error if the common denominator does not divide out.
Poly hahn_rodrigues(int m, const Rational& alpha, const Rational& beta, const Rational& n_param);

/// Value of ρ(n) for integer 0 <= n < N, with N a positive integer and α, β
/// nonnegative integers (all Γ arguments are then positive integers).
Rational hahn_weight(int n, int alpha, int beta, int n_param);

// ---------------------------------------------------------------------------
// f, g, h, Q and Eulerian families
// ---------------------------------------------------------------------------

/// f_m(t) = 1/(m+2) Σ_k C(m, m-k) C(2m+2-k, m+1-k) t^k.
Poly f_poly(int m);
/// f̃_m(t) = t^m f_m(1/t).
Poly f_tilde_poly(int m);
/// g_m(t) = 1/(m+1) Σ_j C(m+1, j+1) C(m+1, j) t^j.
Poly g_poly(int m);
/// h_m(n) = (n+1)(n+2)^2...(n+m+1)^2(n+m+2) / (1·2^2...(m+1)^2(m+2)).
/// h_{-1} is the empty product 1.
Poly h_poly(int m);

Poly q_poly_via_nabla(int m);
Poly q_poly_via_inverse_euler(int m);
/// Q_m, computed both ways; throws std::logic_error if they differ.
Poly q_poly(int m);

/// Row n >= 1 of the Eulerian triangle A(n, j) = (j+1)A(n-1, j) + (n-j)A(n-1, j-1).
std::vector<Integer> eulerian_triangle_row(int n);

struct EulerianMember {
  Poly q;  // (s+1)^{k+1} - s^{k+1}
  Poly p;  // Euler transform of q
};

/// Throws std::logic_error if P differs from the triangle row k+1.
EulerianMember eulerian_family(int k);

}  // namespace hillpoly

#endif  // HILLPOLY_FAMILIES_HPP
