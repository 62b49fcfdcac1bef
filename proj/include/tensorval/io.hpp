// JSON, CSV and OFF conversions.
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "tensorval/exact_scalar.hpp"
#include "tensorval/mc.hpp"
#include "tensorval/polytope.hpp"
#include "tensorval/symtensor.hpp"

namespace tensorval {

using Json = nlohmann::json;

/// [[exponents, coefficient], ...] in lexicographic monomial order.
Json to_json(const SymTensor& t);
SymTensor symtensor_from_json(const Json& j);

/// {"num", "den", "piHalfPow", "value"} for a single term; {"terms": [...], "value"} otherwise.
Json to_json(const ExactScalar& x);

/// {"mean", "stderr", "samples", "seed", "windowVolume"}.
Json to_json(const Estimate& e);
Estimate estimate_from_json(const Json& j);

/// One row per coefficient: label,exponents,mean,stderr. Includes a header row.
std::string estimate_to_csv(const Estimate& e, const std::string& label);

/// {"dim": n, "vertices": [[...], ...]}.
Json to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);
/// OFF vertices; the coordinate count of the first vertex line gives the dimension.
Polytope polytope_from_off(std::istream& in);
/// Reads a .off file or a JSON polytope file.
Polytope load_polytope(const std::string& path);

}  // namespace tensorval
