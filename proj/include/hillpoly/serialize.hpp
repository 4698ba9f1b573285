#ifndef HILLPOLY_SERIALIZE_HPP
#define HILLPOLY_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "hillpoly/identities.hpp"
#include "hillpoly/poly.hpp"
#include "hillpoly/rootloc.hpp"

namespace hillpoly {

using Json = nlohmann::ordered_json;

/// ["num", "den"] in base 10.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"var": "t", "coeffs": [["num","den"], ...]}, ascending degree.
Json poly_to_json(const Poly& p, char var);
/// Throws std::invalid_argument on a malformed document.
Poly poly_from_json(const Json& j);

Json to_json(const LineCertificate& cert);
Json to_json(const NegativeRootsResult& result);
Json to_json(const IdentityReport& report);

/// Coefficients as "num/den" strings joined by ';' (CSV cells must not be
/// read as floats).
std::string poly_to_csv_cell(const Poly& p);

}  // namespace hillpoly

#endif  // HILLPOLY_SERIALIZE_HPP
