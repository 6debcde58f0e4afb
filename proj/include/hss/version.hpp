#pragma once

namespace hss {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hss
