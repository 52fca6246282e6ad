#pragma once

#include <string>
#include <string_view>

#include "wetpaper/pipeline.hpp"

namespace wetpaper {

/// JSON document with N_A, N_FP, N_E, leftover_pixels and an `areas`
/// array of {area, k, q_p, flips}.
std::string report_to_json(const EmbedReport& report, int indent = 2);

/// Throws std::invalid_argument on malformed or incomplete documents.
EmbedReport report_from_json(std::string_view json);

}  // namespace wetpaper
