#pragma once

namespace oddhole {

inline constexpr const char* version_string = "0.1.0";

}  // namespace oddhole
