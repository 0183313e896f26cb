#pragma once

namespace supercong {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace supercong
