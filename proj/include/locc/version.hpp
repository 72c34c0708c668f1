#pragma once

namespace locc {

inline constexpr const char* kToolName = "loccdist";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;

}  // namespace locc
