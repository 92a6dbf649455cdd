#pragma once

namespace stirmix {

inline constexpr const char* kEngineVersion = "stirmix 1.0.0";

}  // namespace stirmix
