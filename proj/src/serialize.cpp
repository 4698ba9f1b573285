#include "hillpoly/serialize.hpp"

#include <stdexcept>

namespace hillpoly {

Json rational_to_json(const Rational& r) { return Json::array({r.get_num().get_str(), r.get_den().get_str()}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw std::invalid_argument("rational: expected [\"num\", \"den\"]");
  return parse_rational(j[0].get<std::string>() + "/" + j[1].get<std::string>());
}

Json poly_to_json(const Poly& p, char var) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_json(c));
  return Json{{"var", std::string(1, var)}, {"coeffs", std::move(coeffs)}};
}

Poly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("poly: expected {\"var\", \"coeffs\"}");
  std::vector<Rational> c;
  for (const auto& entry : j["coeffs"]) c.push_back(rational_from_json(entry));
  return Poly(std::move(c));
}

Json to_json(const LineCertificate& cert) {
  Json j{{"verdict", cert.on_line() ? "on-line" : "off-line"},
         {"symmetry_sign", cert.symmetry_sign},
         {"odd", cert.odd_flag},
         {"even_part", poly_to_json(cert.even_part, 'w')},
         {"real_roots", cert.real_root_count},
         {"distinct_real_roots", cert.distinct_real_roots},
         {"multiplicities", cert.multiplicities}};
  j["witness"] = cert.witness ? Json(*cert.witness) : Json(nullptr);
  return j;
}

Json to_json(const NegativeRootsResult& result) {
  Json j{{"verdict", result.pass ? "pass" : "fail"},
         {"simple", result.simple},
         {"degree", result.degree},
         {"negative_roots", result.negative_root_count}};
  j["witness"] = result.witness ? Json(*result.witness) : Json(nullptr);
  return j;
}

Json to_json(const IdentityReport& report) {
  Json j{{"name", report.name}, {"pass", report.pass}, {"range", report.range}, {"cases", report.cases}};
  if (report.failing_case) {
    j["failing_case"] = *report.failing_case;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
  }
  if (!report.notes.empty()) j["notes"] = report.notes;
  j["seconds"] = report.seconds;
  return j;
}

std::string poly_to_csv_cell(const Poly& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ';';
    const Rational& c = p.coeffs()[k];
    out += c.get_num().get_str() + "/" + c.get_den().get_str();
  }
  return out;
}

}  // namespace hillpoly
