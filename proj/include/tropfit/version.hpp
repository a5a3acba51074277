#pragma once

namespace tropfit {
inline constexpr const char* kVersion = "0.1.0";
}
