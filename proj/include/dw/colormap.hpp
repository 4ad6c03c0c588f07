// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace dw {

/// 256-entry RGB lookup table over t in [0,1], sampled piecewise-linearly.
/// The built-in table is the reversed Spectral map, frozen as data so the
/// encoding is bit-stable and needs no plotting library.
struct ColormapLUT {
    std::array<std::array<uint8_t, 3>, 256> entries;

    static const ColormapLUT& spectral_reversed();
    /// Text file: 256 lines of "r g b" (0..255).
    static ColormapLUT from_file(const std::string& path);

    /// Piecewise-linear lookup; t is clamped to [0,1].
    std::array<uint8_t, 3> sample(double t) const;

    /// Continuous inverse: the (segment, offset) whose interpolated color is
    /// nearest to the query, as t in [0,1]. Ties take the lowest segment.
    double decode(uint8_t r, uint8_t g, uint8_t b) const;
};

}  // namespace dw
