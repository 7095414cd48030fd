#pragma once

namespace wci {
inline constexpr const char* kVersion = "0.1.0";
}
