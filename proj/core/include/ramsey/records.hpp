#pragma once

#include <optional>
#include <string>

#include "ramsey/engine.hpp"
#include "ramsey/extraction.hpp"

namespace ramsey {

/// Machine-readable result record (single JSON object, stable field set).
std::string result_record_json(const std::string& pattern_g6, int r, const RamseyResult& result);

std::string trace_to_json(const ExtractionTrace& trace, const EdgeColouring& host,
                          const ExtractOutcome& outcome);

enum class VerifyStatus { valid, invalid, parse_error };

/// Replay any emitted certificate: a witness colouring file (pattern taken
/// from its header or from `pattern_g6`), a result record, or an extraction
/// trace. Returns valid only when every contained certificate checks out.
VerifyStatus verify_artifact(const std::string& text,
                             const std::optional<std::string>& pattern_g6,
                             std::string* message = nullptr);

}  // namespace ramsey
