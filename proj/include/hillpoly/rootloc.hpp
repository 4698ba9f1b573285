#ifndef HILLPOLY_ROOTLOC_HPP
#define HILLPOLY_ROOTLOC_HPP

#include <optional>
#include <string>
#include <vector>

#include "hillpoly/poly.hpp"

namespace hillpoly {

enum class LineVerdict { on_line, off_line };

/// Certificate that every root of Q lies on Re s = -a/2 (or a witness that
/// one does not). With u = 2s + a the polynomial R(u) = Q((u - a)/2) is even
/// or odd, R(u) = u^δ S(u²), and the roots are on the line iff every root of
/// S is real and <= 0.
struct LineCertificate {
  LineVerdict verdict = LineVerdict::on_line;
  int symmetry_sign = 1;  // Q(-a-s) = symmetry_sign · Q(s)
  Poly even_part;         // S
  bool odd_flag = false;  // δ = 1
  /// Roots of S in (-∞, 0] counted with multiplicity.
  int real_root_count = 0;
  int distinct_real_roots = 0;
  /// multiplicities[i] = number of distinct roots of S in (-∞, 0] with
  /// multiplicity i + 1.
  std::vector<int> multiplicities;
  std::optional<std::string> witness;

  bool on_line() const { return verdict == LineVerdict::on_line; }
};

/// Throws std::invalid_argument when Q is zero or Q(-a-s) != ±Q(s); the
/// method does not apply then, which is different from an off-line verdict.
LineCertificate critical_line_check(const Poly& q, int a);

struct NegativeRootsResult {
  bool pass = false;
  bool simple = false;
  int degree = 0;
  /// Distinct roots in (-∞, 0).
  int negative_root_count = 0;
  std::optional<std::string> witness;
};

/// Pass iff gcd(P, P') is constant and P has deg P distinct roots in (-∞, 0).
/// Throws std::domain_error for P = 0.
NegativeRootsResult negative_simple_roots_check(const Poly& p);

struct DiffEqSolution {
  int order = 0;
  int nullspace_dimension = 0;
  /// p_0 .. p_h with deg p_i <= i, p_h != 0 and monic in its top term.
  std::optional<std::vector<Poly>> coefficients;
  /// A solution exists but p_0 = 0.
  bool degenerate = false;
};

/// Searches for (Σ_{i=0}^h p_i(s) ∇^i) Q = 0 with deg p_i <= i by an exact
/// null-space computation. Throws std::invalid_argument for h < 1.
DiffEqSolution diffeq_search(const Poly& q, int h);

}  // namespace hillpoly

#endif  // HILLPOLY_ROOTLOC_HPP
