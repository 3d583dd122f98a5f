#pragma once

namespace cascade {

inline constexpr const char* version_string = "cascade 0.1.0";

} // namespace cascade
