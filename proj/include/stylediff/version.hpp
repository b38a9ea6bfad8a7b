#pragma once

namespace stylediff {

inline constexpr const char* kToolName = "stylediff";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";

}  // namespace stylediff
