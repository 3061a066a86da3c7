#pragma once

namespace ltt {

inline constexpr const char* kVersion = "1.0.0";

} // namespace ltt
