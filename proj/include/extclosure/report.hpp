#pragma once

// JSON payloads for command results. Keys are sorted (nlohmann::json uses
// std::map), so serialized reports are byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "extclosure/diagnose.hpp"
#include "extclosure/extensions.hpp"
#include "extclosure/ring_file.hpp"

namespace extclosure {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

Json element_json(const LocalAlgebra& algebra, const RingElement& a);
Json ring_matrix_json(const LocalAlgebra& algebra, const RingMatrix& m);
Json matrix_json(const Matrix& m);
Json invariants_json(const AlgebraInvariants& inv);
Json classification_json(const Classification& c);

/// Invariants, classification, basis labels, generators, socle.
Json analyze_json(const AlgebraPtr& algebra);
Json module_json(const FpModule& m, std::size_t betti_steps);
Json resolution_json(const FreeResolution& res, const LocalAlgebra& algebra);
Json filt_json(const std::vector<FiltLevel>& levels, bool include_modules);
Json closure_json(const ClosureVerdict& v);
Json diagnosis_json(const AlgebraPtr& algebra, const DiagnosisReport& r);
Json ladder_json(const LadderReport& r);

/// Report envelope: {schema, command, config, result, status}.
Json make_report(const std::string& command, Json config, Json result, const std::string& status);

/// Pretty JSON text with a trailing newline.
std::string dump(const Json& j);

}  // namespace extclosure
