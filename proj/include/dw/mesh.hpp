// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dw/geometry.hpp"

namespace dw {

/// World-space triangle mesh built from a depth frame by connecting adjacent
/// pixel points. Triangles spanning a depth discontinuity are kept (they
/// occlude) but flagged stretched; the rasterizer turns the flag into
/// occlusion-mask zeros.
struct WarpMesh {
    std::vector<Vec3> vertices;                    // one per valid pixel, row-major
    std::vector<std::array<int32_t, 3>> triangles;
    std::vector<uint8_t> stretched;                // per triangle
    int source_frame = -1;
};

/// Unprojects every valid pixel center through K, moves it to world space via
/// the camera-to-world pose, and emits two triangles per fully-valid 2x2 quad
/// (split along the top-left -> bottom-right diagonal). A triangle is flagged
/// stretched when the max pairwise relative depth difference
/// |d_i - d_j| / min(d_i, d_j) among its corners exceeds stretch_threshold.
/// Throws EmptyMeshError when no fully-valid quad exists.
WarpMesh build_mesh(const DepthFrame& depth, const Intrinsics& K, const Pose& pose,
                    double stretch_threshold, int source_frame = -1);

inline constexpr double kDefaultStretchThreshold = 0.1;

}  // namespace dw
