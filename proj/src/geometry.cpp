// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace dw {

void Intrinsics::validate() const {
    if (!(fx > 0.0) || !(fy > 0.0)) throw ValidationError("intrinsics: focal lengths must be positive");
    if (width <= 0 || height <= 0) throw ValidationError("intrinsics: image size must be positive");
    if (!(cx >= 0.0 && cx < width) || !(cy >= 0.0 && cy < height))
        throw ValidationError("intrinsics: principal point outside image");
}

bool Pose::is_orthonormal(double eps) const {
    Mat3 rtr = R.transposed() * R;
    Mat3 i = Mat3::identity();
    for (int k = 0; k < 9; ++k)
        if (std::abs(rtr.m[k] - i.m[k]) > eps) return false;
    return std::abs(R.det() - 1.0) <= eps;
}

Projection project(const Vec3& p_cam, const Intrinsics& K) {
    if (!(p_cam.z > 0.0)) throw BehindCameraError("project: point has non-positive depth");
    Projection out;
    out.u = K.fx * p_cam.x / p_cam.z + K.cx;
    out.v = K.fy * p_cam.y / p_cam.z + K.cy;
    out.depth = p_cam.z;
    return out;
}

Vec3 unproject(double u, double v, double depth, const Intrinsics& K) {
    if (!(depth > 0.0)) throw BehindCameraError("unproject: non-positive depth");
    return {(u - K.cx) * depth / K.fx, (v - K.cy) * depth / K.fy, depth};
}

Vec3 transform_point(const Vec3& p, const Pose& from, const Pose& to) {
    return to.to_camera(from.to_world(p));
}

double rotation_angle_between(const Mat3& a, const Mat3& b) {
    double tr = (a * b.transposed()).trace();
    double c = std::clamp((tr - 1.0) / 2.0, -1.0, 1.0);
    return std::acos(c);
}

}  // namespace dw
