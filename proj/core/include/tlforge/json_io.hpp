#pragma once

#include <string>

#include <json.hpp>

#include "tlforge/catalog.hpp"
#include "tlforge/classify.hpp"
#include "tlforge/report.hpp"
#include "tlforge/vsystem.hpp"

namespace tlforge {

using Json = nlohmann::json;

// Matrix interchange: {"rows": R, "cols": C, "data": [[re, im], ...]},
// data row-major. Readers reject shape/length mismatches and non-finite
// entries with std::invalid_argument.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// V-system: {"n": n, "r": r, "mats": [matrix, ...]}.
Json vsystem_to_json(const VSystem& vs);
VSystem vsystem_from_json(const Json& j);

// One {"relation", "residual", "pass"} object per check.
Json report_to_json(const Report& rep);

Json class_report_to_json(const ClassReport& rep);

// Instance: {"family", "n", "r", "Q", "params", "vsystem"}.
Json family_to_json(const FamilyInstance& inst);
FamilyInstance family_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace tlforge
