#pragma once

namespace hec {

inline constexpr const char* version = "0.1.0";

}  // namespace hec
