#pragma once

namespace evb {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace evb
