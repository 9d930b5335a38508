#pragma once

namespace scrollcalc {

inline constexpr const char* kToolName = "scrollcalc";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace scrollcalc
