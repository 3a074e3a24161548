#pragma once

namespace giantatom {

inline constexpr const char* kVersion = "0.1.0";

} // namespace giantatom
