#pragma once

namespace kcon {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace kcon
