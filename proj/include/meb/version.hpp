#pragma once

namespace meb {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace meb
