#pragma once

namespace atiyah {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace atiyah
