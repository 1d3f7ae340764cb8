#pragma once

namespace rnls {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSnapshotFormat = "RNLS1";

}  // namespace rnls
