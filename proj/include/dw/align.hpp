// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "dw/geometry.hpp"

namespace dw {

/// Result of the inverse-depth scale/shift fit: 1/X ~= s/D + b.
struct AlignmentResult {
    double s = 1.0;        // dimensionless scale
    double b = 0.0;        // shift, 1/meters
    double residual = 0.0; // RMS of inverse-depth residuals
    uint64_t n_pixels = 0;
};

struct AlignOptions {
    // Pixels with depth outside (depth_min, depth_max) in either input are
    // excluded from the fit.
    double depth_min = 1e-4;
    double depth_max = 1e6;
    int threads = 0;
};

/// Least-squares fit of one global (s, b) over all valid pixels of all
/// frames, minimizing sum || 1/X - (s/D + b) ||^2 via the closed-form 2x2
/// normal equations. Per-frame partial sums may be computed in parallel;
/// they are merged in frame order, so the result does not depend on the
/// thread count.
AlignmentResult fit_scale_shift(const std::vector<DepthFrame>& relative,
                                const std::vector<DepthFrame>& metric,
                                const AlignOptions& opts = {});

/// Applies the fit: d_out = 1 / (s/d_in + b). Pixels where the aligned
/// inverse depth is non-positive become invalid.
DepthFrame apply_alignment(const DepthFrame& frame, const AlignmentResult& result);

}  // namespace dw
