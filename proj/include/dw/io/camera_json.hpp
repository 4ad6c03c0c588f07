// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "dw/geometry.hpp"

namespace dw::io {

struct CameraFrame {
    int frame = 0;
    Pose pose;
    Intrinsics intrinsics;
};

/// Camera file: JSON array, one object per frame with `frame`, `rotation`
/// (9 numbers row-major), `translation` (3 numbers, meters), `intrinsics`
/// and `convention` (must be "c2w_xr_yd_zf").
std::vector<CameraFrame> load_cameras(const std::string& path);
void save_cameras(const std::vector<CameraFrame>& cams, const std::string& path);

/// All frames must share one intrinsics block; returns it.
Intrinsics shared_intrinsics(const std::vector<CameraFrame>& cams);

std::vector<Pose> poses_of(const std::vector<CameraFrame>& cams);

}  // namespace dw::io
