#pragma once

namespace numrad {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace numrad
