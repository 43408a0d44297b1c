#pragma once

// JSON formats: presentation files, rule files and machine-readable reports.

#include <json.hpp>

#include <string>

#include "superlie/hnn.hpp"
#include "superlie/rewrite.hpp"

namespace superlie {

using Json = nlohmann::ordered_json;

/// Parses a file; syntax errors carry the byte offset, I/O errors the path.
Json read_json_file(const std::string& path);

/// {"generators": [{"name", "parity"}], "subalgebra_size", "d_parity",
///  "brackets": [{"left", "right", "value": [{"basis", "coeff"}]}],
///  "derivation": [{"arg", "value": [...]}], "t": optional name}
/// Coefficients are "p/q" strings or integers. Errors name the offending field.
HnnPresentation presentation_from_json(const Json& j);
Json to_json(const HnnPresentation& p);

/// {"alphabet": "a,b:odd" or [{"name", "parity"}], "rules": ["xy - v", {"label", "body"}, ...]}
RewriteSystem rules_from_json(const Json& j);
Json to_json(const RewriteSystem& system);

/// True for presentation files (they carry "generators").
bool is_presentation_json(const Json& j);

Json to_json(const ReductionTrace& trace, const RewriteSystem& system);
Json to_json(const GsbReport& report, const RewriteSystem& system);
Json to_json(const ValidationReport& report);
Json to_json(const HnnGsbReport& report, const RewriteSystem& system);
Json to_json(const StructureReport& report);
Json to_json(const AdmissibleBasisReport& report);

}  // namespace superlie
