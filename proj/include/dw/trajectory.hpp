// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "dw/geometry.hpp"

namespace dw {

/// Sampling ranges, all recorded into TrajectorySpec for reproducibility.
/// Angles in degrees here (they are config-facing); radians internally.
struct TrajectoryRanges {
    double dist_min = 2.0;            // meters from look-at point
    double dist_max = 5.0;
    double start_offset_deg = 10.0;   // start position pitch/yaw offsets
    double front_cone_deg = 60.0;     // "in front": validation bound on azimuth
    double path_scale_min = 0.5;      // total path length, x initial distance
    double path_scale_max = 1.5;
    double pitch_limit_deg = 40.0;    // max-min pitch over the trajectory
    double yaw_limit_deg = 20.0;      // max-min yaw over the trajectory
    double max_step_deg = 5.0;        // per-frame rotation smoothness guard
    int waypoints_min = 1;
    int waypoints_max = 3;
};

struct TrajectorySpec {
    Vec3 lookat;
    Vec3 start;
    std::vector<Vec3> waypoints;  // empty for a static camera
    int n_frames = 0;
    uint64_t seed = 0;
    TrajectoryRanges ranges;
    double path_length = 0.0;     // meters; 0 for static
    bool is_static = false;
};

/// Orientation whose optical axis passes through `target`, roll stabilized
/// against world-up. Throws SamplingError when the view direction is
/// (numerically) vertical.
Pose look_at_pose(const Vec3& eye, const Vec3& target);

/// Camera start in front of the subject: distance U[dist_min, dist_max] from
/// the look-at point, position elevation/azimuth offsets each
/// U[-start_offset, +start_offset] relative to the horizontal subject-facing
/// direction (+z), orientation exact look-at. subject_height locates the
/// ground plane (lookat.y + subject_height) for the above-ground guard.
Pose sample_start(const Vec3& lookat, double subject_height, uint64_t seed,
                  const TrajectoryRanges& ranges = {});

struct SampledTrajectory {
    TrajectorySpec spec;
    std::vector<Pose> poses;
};

/// 1-3 waypoints, spline path scaled to a total length U[0.5, 1.5] x the
/// start distance, per-frame exact look-at orientation. Draws violating the
/// pitch/yaw/step/ground constraints are resampled (bounded retries).
/// static_camera = true emits n_frames copies of `start`.
SampledTrajectory sample_trajectory(const Pose& start, const Vec3& lookat, int n_frames,
                                    uint64_t seed, const TrajectoryRanges& ranges = {},
                                    bool static_camera = false,
                                    double subject_height = 1.5);

/// Catmull-Rom through the control points, arc-length reparameterized with
/// smoothstep ease-in/out timing. Endpoints are reproduced exactly;
/// duplicate consecutive control points are skipped.
std::vector<Vec3> interpolate(const std::vector<Vec3>& control, int n_frames);

/// Elevation / azimuth of a camera position as seen from the look-at point,
/// radians (the "pitch/yaw offsets" of the sampler).
double position_pitch(const Vec3& pos, const Vec3& lookat);
double position_yaw(const Vec3& pos, const Vec3& lookat);

}  // namespace dw
