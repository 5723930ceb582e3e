#pragma once

namespace graspgate {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace graspgate
