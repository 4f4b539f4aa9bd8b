#pragma once

namespace invsq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace invsq
