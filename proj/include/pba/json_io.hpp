#pragma once

#include "pba/gellmann.hpp"
#include "pba/lepton_mass.hpp"
#include "pba/lie_closure.hpp"
#include "pba/susy_jc.hpp"

#include <json.hpp>

namespace pba {

/// {"dim": n, "data": [[re, im], ...]} with row-major data of length n^2.
nlohmann::json matrix_to_json(const CMatrix& x);

/// Inverse of matrix_to_json; rejects malformed shape and non-finite entries.
CMatrix matrix_from_json(const nlohmann::json& j);

/// Canonical text: sorted keys, two-space indent, shortest round-trip
/// doubles, trailing newline. parse(dump(x)) redumps to identical bytes.
std::string dump_canonical(const nlohmann::json& j);

nlohmann::json relations_to_json(const std::vector<RelationResidual>& relations);

nlohmann::json susy_report_to_json(const SusyAlgebraReport& report);

/// Sparse list of {"a","b","c","value"} entries with |value| > threshold.
nlohmann::json structure_constants_to_json(const StructureConstants& constants,
                                           double threshold);

nlohmann::json mass_table_to_json(const MassTable& table);

}  // namespace pba
