#pragma once

namespace graphdep {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace graphdep
