// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dw/geometry.hpp"
#include "dw/raster.hpp"

namespace dw {

/// Analytic scene primitive with a parametric motion path. u is the clip
/// parameter in [0, 1]: center(u) = base + amplitude.*sin(2*pi*frequency*u
/// + phase) + linear*u.
struct PrimitiveSpec {
    enum class Shape { sphere, box };
    Shape shape = Shape::sphere;
    Vec3 base;
    Vec3 amplitude;
    Vec3 frequency;
    Vec3 phase;
    Vec3 linear;
    double radius = 0.3;           // spheres
    Vec3 half_extents{0.2, 0.2, 0.2};  // boxes
    std::array<uint8_t, 3> color{200, 200, 200};

    Vec3 center_at(double u) const;
    /// Largest vertical extent (for the above-ground invariant).
    double vertical_size() const;
};

/// Desk-scale procedural dynamic scene: checkered ground plane plus moving
/// primitives, everything deterministic per seed, rendered by ray casting
/// with exact analytic depth.
struct SceneSpec {
    double ground_y = 0.0;        // y-down world: ground at y = 0
    double ground_radius = 30.0;  // finite ground disk; keeps depths inside the far plane
    double checker_period = 0.5;  // meters
    std::array<uint8_t, 3> checker_a{70, 70, 70};
    std::array<uint8_t, 3> checker_b{180, 180, 180};
    std::vector<PrimitiveSpec> primitives;
    int frames = 33;
    uint64_t seed = 0;
};

/// Randomized scene: 1..max_primitives primitives with motion paths that keep
/// them above the ground for every u in [0, 1].
SceneSpec random_scene(uint64_t seed, int frames, int min_primitives = 1,
                       int max_primitives = 4);

/// Ground-truth render of one camera frame: flat-shaded RGB plus exact
/// ray-cast depth (camera-z). Background pixels are invalid in depth.
void render_frame(const SceneSpec& scene, int frame, const Pose& pose,
                  const Intrinsics& K, RgbFrame* rgb, DepthFrame* depth,
                  int threads = 1);

struct CameraStream {
    std::vector<Pose> poses;
    std::vector<RgbFrame> rgb;
    std::vector<DepthFrame> depth;
};

struct MultiCamSample {
    Intrinsics intrinsics;
    std::vector<CameraStream> cams;
    int source_cam = 0;
};

/// Synchronized multi-camera ground-truth render (in-memory; the CLI streams
/// frame by frame instead at large scales). Requires >= 2 cameras.
MultiCamSample render_scene(const SceneSpec& scene,
                            const std::vector<std::vector<Pose>>& cameras,
                            const Intrinsics& K, int source_cam = 0, int threads = 0);

/// One training pair per non-source camera: the source ground-truth depth
/// warped into the target view.
struct PairRecord {
    int target_cam = -1;
    std::vector<RenderOutput> warped;
};
std::vector<PairRecord> build_pairs(const MultiCamSample& sample, double stretch_threshold,
                                    const WarpOptions& warp_opts = {});

}  // namespace dw
