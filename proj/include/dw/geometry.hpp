// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "dw/errors.hpp"
#include "dw/vec.hpp"

namespace dw {

/// Camera convention used everywhere: camera-to-world pose, camera frame
/// x-right / y-down / z-forward. World frame is y-down as well (ground plane
/// at y = 0, heights are negative y), so a level camera has identity rotation.
inline constexpr const char* kCameraConvention = "c2w_xr_yd_zf";

/// World "down" direction (gravity).
inline constexpr Vec3 kWorldDown{0.0, 1.0, 0.0};

struct Intrinsics {
    double fx = 0, fy = 0, cx = 0, cy = 0;
    int width = 0, height = 0;

    void validate() const;
};

/// Rigid camera-to-world pose.
struct Pose {
    Mat3 R;   // orthonormal, det +1
    Vec3 t;   // camera origin in world, meters

    bool is_orthonormal(double eps = 1e-9) const;

    Vec3 to_world(const Vec3& p_cam) const { return R * p_cam + t; }
    Vec3 to_camera(const Vec3& p_world) const { return R.transposed() * (p_world - t); }

    /// Rigid inverse: maps world->camera as a pose-like transform.
    Pose inverse() const {
        Pose inv;
        inv.R = R.transposed();
        inv.t = -(inv.R * t);
        return inv;
    }
};

struct Projection {
    double u = 0, v = 0, depth = 0;
};

/// Pinhole projection of a camera-frame point. Throws BehindCameraError for z <= 0.
Projection project(const Vec3& p_cam, const Intrinsics& K);

/// Inverse pinhole: pixel (u, v) at given depth to a camera-frame point.
Vec3 unproject(double u, double v, double depth, const Intrinsics& K);

/// Re-express a point given in `from` camera coordinates in `to` camera coordinates.
Vec3 transform_point(const Vec3& p, const Pose& from, const Pose& to);

/// Row-major grid of metric depth (meters, positive along camera z) with a
/// validity mask. Row 0 is the top image row. Invalid pixels store 0.
struct DepthFrame {
    int width = 0, height = 0;
    std::vector<double> values;
    std::vector<uint8_t> valid;

    DepthFrame() = default;
    DepthFrame(int w, int h)
        : width(w), height(h), values(size_t(w) * h, 0.0), valid(size_t(w) * h, 0) {}

    size_t index(int x, int y) const { return size_t(y) * width + x; }
    double at(int x, int y) const { return values[index(x, y)]; }
    bool is_valid(int x, int y) const { return valid[index(x, y)] != 0; }

    void set(int x, int y, double d) {
        size_t i = index(x, y);
        values[i] = d;
        valid[i] = 1;
    }
    void set_invalid(int x, int y) {
        size_t i = index(x, y);
        values[i] = 0.0;
        valid[i] = 0;
    }
    size_t valid_count() const {
        size_t n = 0;
        for (uint8_t v : valid) n += v;
        return n;
    }
};

/// Per-pixel {0,1} mask, same layout as DepthFrame.
struct MaskFrame {
    int width = 0, height = 0;
    std::vector<uint8_t> values;

    MaskFrame() = default;
    MaskFrame(int w, int h, uint8_t fill = 0)
        : width(w), height(h), values(size_t(w) * h, fill) {}

    size_t index(int x, int y) const { return size_t(y) * width + x; }
    uint8_t at(int x, int y) const { return values[index(x, y)]; }
    void set(int x, int y, uint8_t v) { values[index(x, y)] = v; }
};

/// Interleaved 8-bit RGB image, row 0 on top.
struct RgbFrame {
    int width = 0, height = 0;
    std::vector<uint8_t> rgb;

    RgbFrame() = default;
    RgbFrame(int w, int h) : width(w), height(h), rgb(size_t(w) * h * 3, 0) {}

    size_t index(int x, int y) const { return (size_t(y) * width + x) * 3; }
    void set(int x, int y, uint8_t r, uint8_t g, uint8_t b) {
        size_t i = index(x, y);
        rgb[i] = r;
        rgb[i + 1] = g;
        rgb[i + 2] = b;
    }
};

/// Scalar image in [0,1] (normalized depth before colormapping).
struct GrayFrame {
    int width = 0, height = 0;
    std::vector<double> values;

    GrayFrame() = default;
    GrayFrame(int w, int h) : width(w), height(h), values(size_t(w) * h, 0.0) {}

    size_t index(int x, int y) const { return size_t(y) * width + x; }
    double at(int x, int y) const { return values[index(x, y)]; }
};

/// Angle of the relative rotation between two orthonormal matrices, radians.
double rotation_angle_between(const Mat3& a, const Mat3& b);

}  // namespace dw
