#ifndef HILLPOLY_STURM_HPP
#define HILLPOLY_STURM_HPP

#include <vector>

#include "hillpoly/poly.hpp"

namespace hillpoly {

/// A rational or one of ±∞; used for interval endpoints.
class ExtendedRational {
 public:
  ExtendedRational(const Rational& value) : value_(value) {}  // NOLINT
  ExtendedRational(int value) : value_(value) {}              // NOLINT
  static ExtendedRational plus_infinity() { return ExtendedRational(1, Tag{}); }
  static ExtendedRational minus_infinity() { return ExtendedRational(-1, Tag{}); }

  bool is_finite() const { return infinity_ == 0; }
  /// +1 / -1 for ±∞, 0 for finite values.
  int infinity_sign() const { return infinity_; }
  const Rational& value() const { return value_; }

  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);

 private:
  struct Tag {};
  ExtendedRational(int inf, Tag) : infinity_(inf) {}
  Rational value_ = 0;
  int infinity_ = 0;
};

/// Sign of p at a point; ±∞ is resolved from the leading term.
int sign_at(const Poly& p, const ExtendedRational& x);

/// Signed remainder sequence p, p', -rem(p, p'), ... Each element after the
/// first two is rescaled by a positive rational to be primitive, which keeps
/// coefficient growth in check without altering any sign.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);

  const std::vector<Poly>& chain() const { return chain_; }
  /// Sign variations of the chain at x, zeros skipped.
  int variations(const ExtendedRational& x) const;

 private:
  std::vector<Poly> chain_;
};

/// p / gcd(p, p'), made primitive.
Poly squarefree_part(const Poly& p);

/// Yun decomposition: factors[i] is squarefree and p = c ∏ factors[i]^{i+1}.
/// Factors are monic and pairwise coprime. A multiplicity that does not occur
/// gets the factor 1; the last factor is never constant.
std::vector<Poly> squarefree_decomposition(const Poly& p);

/// Number of distinct real roots of p in (lo, hi]. The squarefree part is
/// taken internally. Throws std::domain_error for p = 0 and
/// std::invalid_argument unless lo < hi.
int sturm_root_count(const Poly& p, const ExtendedRational& lo, const ExtendedRational& hi);

/// Distinct real roots in the open interval (lo, hi).
int sturm_root_count_open(const Poly& p, const ExtendedRational& lo, const ExtendedRational& hi);

}  // namespace hillpoly

#endif  // HILLPOLY_STURM_HPP
