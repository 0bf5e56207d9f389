#pragma once

#include <string>

#include <json.hpp>

#include "skein/certificate.hpp"
#include "skein/identities.hpp"

namespace skein {

using Json = nlohmann::ordered_json;

// Wire formats. Coefficients that fit in int64 are JSON integers; larger
// ones are decimal strings. Readers throw ParseError on anything else.

Json to_json(const LaurentPoly& p);   // {"-3": 1, "2": -1}
Json to_json(const Eisenstein& z);    // {"a": 16, "b": 0}
Json to_json(const SkeinElement& e);  // {"terms": [{"monomial": [..], "coeff": {..}}]}
Json to_json(const Certificate& c);   // {"steps": [{"family", "n", "k", "coeff"}]}
Json to_json(const SweepReport& r);

LaurentPoly poly_from_json(const Json& j);
Eisenstein eisenstein_from_json(const Json& j);
SkeinElement element_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);

/// Parses text, rejecting duplicate object keys.
Json parse_json(const std::string& text);
/// Reads and parses a file; errors name the path.
Json read_json_file(const std::string& path);

} // namespace skein
