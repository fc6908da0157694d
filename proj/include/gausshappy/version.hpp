#pragma once

namespace gausshappy {

inline constexpr const char* kToolName = "gausshappy";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace gausshappy
