#pragma once

namespace gme {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace gme
