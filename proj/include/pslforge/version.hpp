#pragma once

namespace pslforge {

inline constexpr const char* kVersion = "0.1.0";

} // namespace pslforge
