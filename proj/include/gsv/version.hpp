#pragma once

namespace gsv {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gsv
