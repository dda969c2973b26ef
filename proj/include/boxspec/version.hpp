#pragma once

namespace boxspec {

inline constexpr const char* kVersion = "1.0.0";

} // namespace boxspec
