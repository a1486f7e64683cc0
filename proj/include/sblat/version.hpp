#pragma once

namespace sblat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sblat
