// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "dw/geometry.hpp"

namespace dw::io {

/// Grayscale PFM ("Pf"), negative scale = little-endian, rows bottom-up per
/// the format convention. Values are written as 32-bit floats; invalid pixels
/// as 0. On read, non-positive and non-finite values are marked invalid.
DepthFrame read_depth_pfm(const std::string& path);
void write_depth_pfm(const DepthFrame& frame, const std::string& path);

struct PfmHeader {
    int width = 0, height = 0;
};
/// Header-only probe (for manifest validation).
PfmHeader probe_pfm(const std::string& path);

}  // namespace dw::io
