#pragma once

namespace phin {

inline constexpr const char* VERSION = "0.1.0";

}  // namespace phin
