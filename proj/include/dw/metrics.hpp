// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "dw/geometry.hpp"

namespace dw {

/// Accumulated (summed over frames) camera-accuracy metrics.
struct CameraAccuracyReport {
    double rot_err = 0.0;    // radians
    double trans_err = 0.0;  // meters
    double cam_mc = 0.0;     // mixed units (Frobenius of [R|T] differences)
    size_t n_frames = 0;
    std::string alignment_mode = "none";  // none | sim7
};

/// sum_i arccos(clamp((tr(Rest_i * Rgt_i^T) - 1) / 2, -1, 1)), radians.
double rot_err(const std::vector<Pose>& gt, const std::vector<Pose>& est);

/// sum_i || Test_i - Tgt_i ||_2, meters.
double trans_err(const std::vector<Pose>& gt, const std::vector<Pose>& est);

/// sum_i || [Rest|Test]_i - [Rgt|Tgt]_i ||_F over the 3x4 difference.
double cam_mc(const std::vector<Pose>& gt, const std::vector<Pose>& est);

/// Closed-form similarity (rotation, uniform scale, translation) minimizing
/// sum || s*R*Test_i + t - Tgt_i ||^2 over the trajectory translations, then
/// applied to est (rotations are conjugated by R). Horn's unit-quaternion
/// method; collinear trajectories set `degenerate` and keep the best
/// orthogonal fit.
struct SimilarityTransform {
    double scale = 1.0;
    Mat3 rotation;
    Vec3 translation;
    bool degenerate = false;
};
SimilarityTransform fit_similarity(const std::vector<Pose>& gt, const std::vector<Pose>& est);
std::vector<Pose> apply_similarity(const SimilarityTransform& T, const std::vector<Pose>& est);

CameraAccuracyReport camera_accuracy(const std::vector<Pose>& gt,
                                     const std::vector<Pose>& est,
                                     bool align_sim7 = false);

}  // namespace dw
