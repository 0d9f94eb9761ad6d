#pragma once

namespace hyperising {

inline constexpr const char* kVersion = "0.1.0";

}
