#pragma once

namespace rgbc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rgbc
