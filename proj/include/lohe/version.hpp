#pragma once

namespace lohe {
inline constexpr const char* kToolName = "lohe";
inline constexpr const char* kVersion = "0.1.0";
}  // namespace lohe
