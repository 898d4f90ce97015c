#pragma once

namespace pwss {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace pwss
