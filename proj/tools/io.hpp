#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include <dunkl_forge/cyclic.hpp>
#include <dunkl_forge/dunkl.hpp>
#include <dunkl_forge/forms.hpp>
#include <dunkl_forge/group.hpp>

namespace dforge::io {

using nlohmann::json;

/// Reads a JSON file; ParseError carries the byte offset of a syntax error.
json read_json_file(const std::string& path);
json parse_json(const std::string& text);

/// "3/4", "-2", "1/2+1/2*i", "1-2*z+z^3" (z = zeta_m of the field), "(1.5,-2)".
Scalar parse_scalar(const std::string& text, const Field& field);
/// JSON number, scalar string, or an array of power-basis coefficients.
Scalar scalar_from_json(const json& j, const Field& field);
cplx complex_from_json(const json& j);

/// { "kind", "degree", "generators", "scalar", "names" }
std::shared_ptr<const GroupTable> parse_group(const json& j);

/// Element by label, cycle text, or matrix entries.
Element parse_element(const json& j, const GroupTable& table);

/// { "elements": [...] } | { "closure_of": [...], "add_inverses": b } |
/// { "reflections": true } | { "all_nonidentity": true }. Throws
/// ValidationError naming the first failing subset condition.
SubsetS parse_subset(const json& j, const GroupTable& table);

/// { "points": [...], "lines": [[...], ...] } or { "builtin": "fano" }.
CyclicSpace parse_space(const json& j);

DunklConfig parse_dunkl(const json& j);
DisplacementConfig parse_displacement(const json& j);

json scalar_json(const Scalar& s);
json poly_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j, const Field& field);

json check_json(const CheckResult& c);
json report_json(const Report& r);

}  // namespace dforge::io
