#pragma once

#include <string>

#include "rnls/grid.hpp"

namespace rnls {

/// "RNLS1" snapshot format: magic bytes 0x52 0x4E 0x4C 0x53, u32 version=1,
/// u32 d, u32 k, d x u32 dims, d x f64 lengths, then interleaved
/// little-endian f64 (re,im) pairs, row-major, last axis fastest.
void write_snapshot(const Field& f, const std::string& path);
Field read_snapshot(const std::string& path);

}  // namespace rnls
