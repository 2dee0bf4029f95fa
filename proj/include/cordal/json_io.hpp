// JSON encodings for the CLI. Key order is fixed (ordered_json) so that
// repeated runs produce byte-identical output.
#pragma once

#include <cordal/poly.hpp>
#include <cordal/relations.hpp>
#include <cordal/scalar.hpp>
#include <cordal/torus.hpp>

#include <json.hpp>

#include <string>

namespace cordal {

using Json = nlohmann::ordered_json;

// {"l": int, "m": int, "g": int, "c": decimal string} per term
Json scalar_to_json(const Scalar& s);
// {"ctx": {"n": int, "variant": str}, "terms": [{"coeff": [...], "word": [[i,j,x]...]}]}
Json poly_to_json(const Context& ctx, const Poly& p);
Json relations_to_json(const RelationSet& rs);
Json presentation_to_json(const Presentation& pres, int p, int q);

// inverse of presentation_to_json, for counting over file input; throws
// UsageError on malformed documents
Presentation presentation_from_json(const Json& j);

std::string dump_json(const Json& j);

// plain-text renderings used by --format text
std::string scalar_to_text(const Scalar& s);
std::string poly_to_text(const Poly& p);
std::string vpoly_to_text(const VPoly& p);

}  // namespace cordal
