#pragma once

namespace symm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace symm
