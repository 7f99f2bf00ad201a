#pragma once

namespace annular {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace annular
