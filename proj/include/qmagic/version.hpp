#pragma once

namespace qmagic {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qmagic
