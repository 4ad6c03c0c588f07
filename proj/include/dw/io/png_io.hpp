// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "dw/geometry.hpp"

namespace dw::io {

/// 8-bit PNG I/O with a fixed filter strategy and compression level, so
/// writers are byte-deterministic. Masks are stored as grayscale {0, 255}.
/// Bit-depth or color-type mismatches raise FormatError instead of being
/// silently converted.
RgbFrame read_rgb_png(const std::string& path);
void write_rgb_png(const RgbFrame& frame, const std::string& path);

MaskFrame read_mask_png(const std::string& path);
void write_mask_png(const MaskFrame& frame, const std::string& path);

/// Interop import: 16-bit grayscale PNG, depth = raw * meters_per_unit,
/// raw 0 = invalid.
DepthFrame read_depth_png16(const std::string& path, double meters_per_unit);

struct PngHeader {
    int width = 0, height = 0, bit_depth = 0, color_type = 0;
};
/// IHDR-only probe (for manifest validation).
PngHeader probe_png(const std::string& path);

}  // namespace dw::io
