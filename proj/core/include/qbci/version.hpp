#pragma once

namespace qbci {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qbci
