#pragma once

namespace imbcluster {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace imbcluster
