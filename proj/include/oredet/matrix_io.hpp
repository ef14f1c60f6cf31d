#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include <json.hpp>

#include "oredet/cdsk.hpp"
#include "oredet/ore_matrix.hpp"

namespace oredet {

/// {"n": 2, "entries": [["d","d"],["d","d+1"]], "meta": {...}}; meta optional.
struct MatrixDocument {
    OreMatrix matrix;
    nlohmann::json meta = nlohmann::json::object();
};

/// All failures throw InputError naming the offending location, e.g.
/// "entries[1][0]: column 3: unexpected end of expression".
MatrixDocument parse_matrix_document(const nlohmann::json& doc);
MatrixDocument parse_matrix_document(std::istream& in);
MatrixDocument read_matrix_file(const std::filesystem::path& path);

nlohmann::json matrix_to_json(const OreMatrix& m, const nlohmann::json& meta = nlohmann::json::object());
nlohmann::json entries_to_json(const OreMatrix& m);
nlohmann::json kmatrix_to_json(const KMatrix& m);
nlohmann::json majorant_to_json(const Majorant& m);

/// Certificate with every operator and polynomial as a canonical
/// expression string.
nlohmann::json certificate_to_json(const Dd1Certificate& cert);
/// Inverse of certificate_to_json; throws InputError on malformed input.
Dd1Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace oredet
