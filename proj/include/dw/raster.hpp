// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "dw/geometry.hpp"
#include "dw/mesh.hpp"

namespace dw {

/// Depth buffer plus occlusion mask for one target view. mask=1 pixels are
/// reliably observed: covered by a non-stretched z-buffer winner inside
/// [near, far]. Pixels covered only with mask 0 keep their z-buffer depth.
struct RenderOutput {
    DepthFrame depth;
    MaskFrame mask;
    std::vector<int32_t> winner;  // per-pixel winning triangle; only with record_winners
};

inline constexpr double kDefaultNear = 0.5;   // meters
inline constexpr double kDefaultFar = 100.0;  // meters

struct RenderOptions {
    double near = kDefaultNear;
    double far = kDefaultFar;
    int threads = 1;           // row-band parallelism inside one frame
    bool record_winners = false;
};

/// Deterministic z-buffer software rasterizer: edge-function coverage at
/// pixel centers, perspective-correct 1/z interpolation, no backface culling,
/// depth ties resolved to the lowest triangle index. Triangles crossing the
/// near plane are clipped against it. An empty mesh yields an all-zero mask.
RenderOutput render(const WarpMesh& mesh, const Intrinsics& K, const Pose& target_pose,
                    const RenderOptions& opts = {});

struct WarpOptions {
    double stretch_threshold = kDefaultStretchThreshold;
    double near = kDefaultNear;
    double far = kDefaultFar;
    int threads = 0;  // frame-level parallelism
};

/// Per-frame mesh build + render under the target trajectory. Frames are
/// independent; a frame without any valid quad yields an all-zero output.
std::vector<RenderOutput> warp_depth_sequence(const std::vector<DepthFrame>& depth_video,
                                              const Intrinsics& K,
                                              const std::vector<Pose>& source_poses,
                                              const std::vector<Pose>& target_poses,
                                              const WarpOptions& opts = {});

}  // namespace dw
