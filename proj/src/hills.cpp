#include "hillpoly/hills.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hillpoly/euler.hpp"

namespace hillpoly {

bool is_hill(const std::vector<int>& mu) {
  const auto l = mu.size();
  for (std::size_t i = 0; i < l; ++i) {
    if (mu[i] <= 0 || mu[i] != mu[l - 1 - i]) return false;
    if (i > 0 && 2 * (i + 1) <= l + 1 && mu[i - 1] > mu[i]) return false;
  }
  return true;
}

Hill::Hill(std::vector<int> mu) : mu_(std::move(mu)) {
  if (!is_hill(mu_)) throw std::invalid_argument("not a hill: " + to_string(*this));
}

int Hill::volume() const { return std::accumulate(mu_.begin(), mu_.end(), 0); }

YoungDiagram::YoungDiagram(std::vector<int> lambda) : lambda_(std::move(lambda)) {
  for (std::size_t i = 0; i < lambda_.size(); ++i)
    if (lambda_[i] <= 0 || (i > 0 && lambda_[i - 1] > lambda_[i]))
      throw std::invalid_argument("not a Young diagram");
}

Hill double_diagram(const YoungDiagram& lambda, Parity eps) {
  const auto& l = lambda.lambda();
  if (l.empty()) throw std::invalid_argument("double of the empty diagram");
  std::vector<int> mu(l.begin(), l.end());
  auto tail = l.rbegin();
  if (eps == Parity::odd) ++tail;
  mu.insert(mu.end(), tail, l.rend());
  return Hill(std::move(mu));
}

std::pair<YoungDiagram, Parity> undouble(const Hill& hill) {
  if (hill.empty()) throw std::invalid_argument("undouble of the empty hill");
  const auto& mu = hill.mu();
  const auto half = static_cast<std::size_t>(hill.height());
  return {YoungDiagram(std::vector<int>(mu.begin(), mu.begin() + static_cast<std::ptrdiff_t>(half))),
          hill.width() % 2 == 0 ? Parity::even : Parity::odd};
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string item;
  std::istringstream is{std::string(text)};
  while (std::getline(is, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed hill entry: '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("malformed hill entry: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Hill parse_hill(std::string_view text) {
  constexpr std::string_view prefix = "young:";
  if (text.starts_with(prefix)) {
    text.remove_prefix(prefix.size());
    if (text.empty()) throw std::invalid_argument("empty Young diagram");
    const char suffix = text.back();
    if (suffix != '+' && suffix != '-') throw std::invalid_argument("Young form needs a +/- suffix");
    text.remove_suffix(1);
    return double_diagram(YoungDiagram(parse_int_list(text)), suffix == '+' ? Parity::even : Parity::odd);
  }
  if (text.empty()) return Hill();
  return Hill(parse_int_list(text));
}

std::string to_string(const Hill& hill) {
  std::string s;
  for (std::size_t i = 0; i < hill.mu().size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(hill.mu()[i]);
  }
  return s;
}

HillPolys hill_poly(const Hill& hill) {
  HillPolys out{Poly(Rational(1)), Poly(Rational(1))};
  for (int i = 1; i <= hill.width(); ++i)
    out.h *= pow(Poly{Rational(i), 1}, static_cast<unsigned>(hill.mu()[static_cast<std::size_t>(i - 1)]));
  out.h_tilde = out.h / out.h(Rational(0));
  return out;
}

Poly hill_q(const Hill& hill) { return backward_diff(hill_poly(hill).h_tilde, hill.width()); }

Poly hill_dual(const Hill& hill) {
  const Poly p = euler_transform(hill_q(hill)).p;
  const EulerPair via_h = euler_transform(hill_poly(hill).h_tilde);
  if (via_h.p != p || via_h.d != hill.volume()) throw std::logic_error("hill_dual: h̃ and Q transforms disagree");
  return p;
}

Hill boundary_by_min(const Hill& hill) {
  if (hill.empty()) throw std::invalid_argument("boundary of the empty hill");
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < hill.mu().size(); ++i) out.push_back(std::min(hill.mu()[i], hill.mu()[i + 1]));
  return Hill(std::move(out));
}

Hill boundary(const Hill& hill) {
  Hill b = boundary_by_min(hill);
  const Poly h = hill_poly(hill).h;
  if (gcd(h, shift(h, Rational(-1))) != hill_poly(b).h)
    throw std::logic_error("boundary: min-formula disagrees with gcd(h(x), h(x-1))");
  return b;
}

PhiFactors phi_factors(const Hill& hill) {
  const Poly phi = hill_poly(hill).h;
  const Poly dphi = hill_poly(boundary(hill)).h;
  try {
    return {exact_div(phi, dphi), exact_div(shift(phi, Rational(-1)), dphi)};
  } catch (const std::domain_error&) {
    throw std::logic_error("phi_factors: boundary polynomial does not divide");
  }
}

Poly reflect_phi_plus(const PhiFactors& phi, int width) {
  const Poly r = compose(phi.plus, Poly{Rational(-width), -1});
  return phi.plus.deg() % 2 == 0 ? r : -r;
}

std::vector<Hill> enumerate_hills(int v_max) {
  if (v_max < 1) throw std::invalid_argument("enumerate_hills: v_max >= 1");
  std::vector<Hill> hills;
  // Diagrams are built part by part; a diagram of m parts contributes
  // 2|λ| (even double) and 2|λ| - λ_m (odd double) to the volume.
  std::vector<int> lambda;
  auto extend = [&](auto&& self, int sum) -> void {
    if (!lambda.empty()) {
      if (2 * sum - lambda.back() <= v_max) hills.push_back(double_diagram(YoungDiagram(lambda), Parity::odd));
      if (2 * sum <= v_max) hills.push_back(double_diagram(YoungDiagram(lambda), Parity::even));
    }
    const int start = lambda.empty() ? 1 : lambda.back();
    for (int next = start;; ++next) {
      // Adding `next` gives odd-double volume 2(sum+next) - next = 2 sum + next.
      if (2 * sum + next > v_max) break;
      lambda.push_back(next);
      self(self, sum + next);
      lambda.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(hills.begin(), hills.end(), [](const Hill& a, const Hill& b) {
    if (a.volume() != b.volume()) return a.volume() < b.volume();
    if (a.width() != b.width()) return a.width() < b.width();
    return a.mu() < b.mu();
  });
  return hills;
}

}  // namespace hillpoly
