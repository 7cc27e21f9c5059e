#pragma once

#include <map>
#include <string>

#include "nkdet/determinacy.hpp"

namespace nkdet {

/// key=value per line, '#' starts a comment, blank lines ignored.
/// Recognized keys: zero-tol, boundary-tol, seed, samples, exact.
/// Throws std::runtime_error on unreadable files or malformed lines.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Applies recognized keys onto a config; unknown keys are an error.
void apply_config_entries(const std::map<std::string, std::string>& entries,
                          ReportConfig& config);

}  // namespace nkdet
