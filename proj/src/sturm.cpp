#include "hillpoly/sturm.hpp"

#include <stdexcept>

namespace hillpoly {

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinity_ != 0 || b.infinity_ != 0) {
    if (a.infinity_ == b.infinity_) return false;
    if (a.infinity_ == -1 || b.infinity_ == 1) return true;
    return false;
  }
  return a.value_ < b.value_;
}

int sign_at(const Poly& p, const ExtendedRational& x) {
  if (p.is_zero()) return 0;
  if (x.is_finite()) return sign(p(x.value()));
  const int lead = sign(p.leading());
  if (x.infinity_sign() > 0 || p.deg() % 2 == 0) return lead;
  return -lead;
}

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  chain_.push_back(p);
  Poly dp = derivative(p);
  if (dp.is_zero()) return;
  chain_.push_back(dp);
  while (true) {
    const Poly& a = chain_[chain_.size() - 2];
    const Poly& b = chain_.back();
    Poly r = divrem(a, b).second;
    if (r.is_zero()) break;
    chain_.push_back(-primitive_part(r));
  }
}

int SturmChain::variations(const ExtendedRational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (p.is_constant()) return Poly(Rational(1));
  return primitive_part(exact_div(p, gcd(p, derivative(p))));
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<Poly> factors;
  if (p.is_constant()) return factors;
  Poly a = monic(p);
  Poly b = derivative(a);
  Poly c = gcd(a, b);
  Poly w = exact_div(a, c);
  Poly y = exact_div(b, c);
  Poly z = y - derivative(w);
  while (!w.is_constant()) {
    Poly g = gcd(w, z);
    factors.push_back(g);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - derivative(w);
  }
  while (!factors.empty() && factors.back().is_constant()) factors.pop_back();
  return factors;
}

int sturm_root_count(const Poly& p, const ExtendedRational& lo, const ExtendedRational& hi) {
  if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_root_count requires lo < hi");
  if (p.is_constant()) return 0;
  const SturmChain chain(squarefree_part(p));
  return chain.variations(lo) - chain.variations(hi);
}

int sturm_root_count_open(const Poly& p, const ExtendedRational& lo, const ExtendedRational& hi) {
  int n = sturm_root_count(p, lo, hi);
  if (hi.is_finite() && p(hi.value()) == 0) --n;
  return n;
}

}  // namespace hillpoly
