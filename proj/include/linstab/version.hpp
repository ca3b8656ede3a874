#pragma once

namespace linstab {

inline constexpr const char* kVersion = "0.1.0";

}
