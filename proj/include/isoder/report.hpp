#ifndef ISODER_REPORT_HPP
#define ISODER_REPORT_HPP

#include "json.hpp"

#include <string>

namespace isoder {

/// Version tag of the machine-readable report schema. A report is
/// {command, inputs, verdict, witness, flags, version} where inputs is an
/// object of canonically printed input strings, witness is command-specific
/// (object or null), and flags is an array of note strings.
inline constexpr const char* kReportVersion = "1";

/// A fresh report skeleton for the given command with empty inputs/flags,
/// null witness, and the version stamped in.
nlohmann::json make_report(const std::string& command);

/// Human-readable rendering of a report document.
std::string render_text(const nlohmann::json& report);

} // namespace isoder

#endif
