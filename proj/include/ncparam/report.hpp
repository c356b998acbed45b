#pragma once

#include "ncparam/amplitude.hpp"

#include <string>

namespace ncparam {

enum class ReportFormat { Json, Text };

/// Deterministic serialization of an expansion and its power counting.
/// JSON field order is fixed; see docs/report.schema.json.
std::string emit_report(const AmplitudeExpansion& expansion, const PowerCounting& pc, ReportFormat format);

ReportFormat parse_report_format(const std::string& name);

} // namespace ncparam
