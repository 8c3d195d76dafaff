#pragma once

#include <nlohmann/json.hpp>

#include "diffdef/definability.hpp"

namespace diffdef {

inline constexpr const char* kTraceSchema = "diffdef.trace/1";

/// Polynomials are stored in canonical text form, so the output is stable across runs.
nlohmann::json trace_to_json(const DerivationTrace& trace);
/// Throws Error (or ParseError) on malformed input.
DerivationTrace trace_from_json(const nlohmann::json& j);

}  // namespace diffdef
