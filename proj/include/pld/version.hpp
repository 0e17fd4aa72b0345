#pragma once

namespace pld {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pld
