#ifndef HILLPOLY_HILLS_HPP
#define HILLPOLY_HILLS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hillpoly/poly.hpp"

namespace hillpoly {

/// Palindromic sequence of positive integers that weakly increases towards the
/// middle. The empty hill (width 0) is the terminal object of the boundary
/// operator, with h = 1.
class Hill {
 public:
  Hill() = default;
  /// Throws std::invalid_argument unless mu is a hill.
  explicit Hill(std::vector<int> mu);

  const std::vector<int>& mu() const { return mu_; }
  int width() const { return static_cast<int>(mu_.size()); }
  int height() const { return (width() + 1) / 2; }
  int volume() const;
  /// deg Q_mu = volume - width.
  int dual_degree() const { return volume() - width(); }
  bool empty() const { return mu_.empty(); }

  friend bool operator==(const Hill&, const Hill&) = default;

 private:
  std::vector<int> mu_;
};

bool is_hill(const std::vector<int>& mu);

/// Weakly increasing sequence of positive integers.
class YoungDiagram {
 public:
  explicit YoungDiagram(std::vector<int> lambda);
  const std::vector<int>& lambda() const { return lambda_; }
  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> lambda_;
};

/// Even (+) and odd (-) doubles.
enum class Parity { even, odd };

Hill double_diagram(const YoungDiagram& lambda, Parity eps);
/// Inverse of double_diagram; throws std::invalid_argument for the empty hill.
std::pair<YoungDiagram, Parity> undouble(const Hill& hill);

/// "1,2,2,1" or "young:1,2+" / "young:1,2-".
Hill parse_hill(std::string_view text);
std::string to_string(const Hill& hill);

struct HillPolys {
  Poly h;        // ∏ (s+i)^{mu_i}
  Poly h_tilde;  // h / h(0)
};

HillPolys hill_poly(const Hill& hill);

/// Q_mu = ∇^width h̃_mu.
Poly hill_q(const Hill& hill);

/// P_mu, the Euler transform of Q_mu. Throws std::logic_error if the
/// transform of h̃_mu (over (1-t)^{v+1}) gives a different numerator.
Poly hill_dual(const Hill& hill);

/// (∂mu)_i = min(mu_i, mu_{i+1}); a width-1 hill maps to the empty hill.
/// Throws std::logic_error if h_{∂mu} differs from gcd(h_mu(x), h_mu(x-1)).
Hill boundary(const Hill& hill);

/// Min-formula only, without the gcd cross-check.
Hill boundary_by_min(const Hill& hill);

struct PhiFactors {
  Poly plus;   // φ(x) / ∂φ(x)
  Poly minus;  // φ(x-1) / ∂φ(x)
};

/// φ = h_mu. Both divisions are exact; throws std::logic_error otherwise.
PhiFactors phi_factors(const Hill& hill);

/// φ₋(x) = (-1)^{deg φ₊} φ₊(-a-x), the reflection about Re x = -a/2.
Poly reflect_phi_plus(const PhiFactors& phi, int width);

/// Every hill with volume <= v_max, ordered by volume, then width, then
/// lexicographically, generated from (diagram, parity) pairs.
std::vector<Hill> enumerate_hills(int v_max);

}  // namespace hillpoly

#endif  // HILLPOLY_HILLS_HPP
