#pragma once

#include <string_view>

namespace polydiag {

// Embedded in cache keys; bump when counting output can change.
inline constexpr std::string_view kVersion = "1.0.0";

}  // namespace polydiag
