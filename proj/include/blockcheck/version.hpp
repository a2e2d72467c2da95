#pragma once

namespace blockcheck {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace blockcheck
