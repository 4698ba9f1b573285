#include "hillpoly/rational.hpp"

#include <limits>
#include <stdexcept>

namespace hillpoly {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(0, 1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational literal: " + s);
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in: " + s);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

long to_long(const Rational& value) {
  if (!is_integer(value) || !value.get_num().fits_slong_p())
    throw std::domain_error("not a machine integer: " + to_string(value));
  return value.get_num().get_si();
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational rising(const Rational& a, unsigned long k) {
  Rational r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= a + i;
  return r;
}

Rational falling(const Rational& a, unsigned long k) {
  Rational r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= a - i;
  return r;
}

Rational binomial(const Rational& a, unsigned long k) {
  Rational r = falling(a, k) / Rational(factorial(k));
  r.canonicalize();
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace hillpoly
