// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/synth.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dw/kernels/kernels.hpp"
#include "dw/parallel.hpp"
#include "dw/rng.hpp"

namespace dw {

namespace {

constexpr double kPi = 3.14159265358979323846;

kernels::FramePrims frame_prims(const SceneSpec& scene, double u) {
    kernels::FramePrims fp;
    fp.has_ground = 1;
    fp.ground_y = scene.ground_y;
    fp.ground_radius = scene.ground_radius;
    for (const auto& prim : scene.primitives) {
        const Vec3 c = prim.center_at(u);
        if (prim.shape == PrimitiveSpec::Shape::sphere) {
            fp.sx.push_back(c.x);
            fp.sy.push_back(c.y);
            fp.sz.push_back(c.z);
            fp.sr.push_back(prim.radius);
        }
    }
    for (const auto& prim : scene.primitives) {
        if (prim.shape != PrimitiveSpec::Shape::box) continue;
        const Vec3 c = prim.center_at(u);
        fp.bx0.push_back(c.x - prim.half_extents.x);
        fp.by0.push_back(c.y - prim.half_extents.y);
        fp.bz0.push_back(c.z - prim.half_extents.z);
        fp.bx1.push_back(c.x + prim.half_extents.x);
        fp.by1.push_back(c.y + prim.half_extents.y);
        fp.bz1.push_back(c.z + prim.half_extents.z);
    }
    return fp;
}

// colors indexed by the kernel's primitive ids: spheres first, then boxes
std::vector<std::array<uint8_t, 3>> prim_colors(const SceneSpec& scene) {
    std::vector<std::array<uint8_t, 3>> colors;
    for (const auto& p : scene.primitives)
        if (p.shape == PrimitiveSpec::Shape::sphere) colors.push_back(p.color);
    for (const auto& p : scene.primitives)
        if (p.shape == PrimitiveSpec::Shape::box) colors.push_back(p.color);
    return colors;
}

}  // namespace

Vec3 PrimitiveSpec::center_at(double u) const {
    Vec3 c = base + linear * u;
    c.x += amplitude.x * std::sin(2.0 * kPi * frequency.x * u + phase.x);
    c.y += amplitude.y * std::sin(2.0 * kPi * frequency.y * u + phase.y);
    c.z += amplitude.z * std::sin(2.0 * kPi * frequency.z * u + phase.z);
    return c;
}

double PrimitiveSpec::vertical_size() const {
    return shape == Shape::sphere ? radius : half_extents.y;
}

SceneSpec random_scene(uint64_t seed, int frames, int min_primitives, int max_primitives) {
    if (frames < 1) throw ValidationError("random_scene: frames must be >= 1");
    if (min_primitives < 1 || max_primitives < min_primitives)
        throw ValidationError("random_scene: bad primitive count range");

    static const std::array<std::array<uint8_t, 3>, 8> palette = {{{204, 62, 52},
                                                                   {56, 120, 196},
                                                                   {70, 160, 84},
                                                                   {222, 170, 48},
                                                                   {150, 84, 188},
                                                                   {226, 120, 62},
                                                                   {64, 180, 178},
                                                                   {186, 96, 134}}};
    Rng rng(seed);
    SceneSpec scene;
    scene.frames = frames;
    scene.seed = seed;
    scene.checker_period = rng.uniform(0.35, 0.8);

    const int n = int(rng.uniform_int(min_primitives, max_primitives));
    for (int i = 0; i < n; ++i) {
        PrimitiveSpec prim;
        prim.shape = rng.uniform01() < 0.6 ? PrimitiveSpec::Shape::sphere
                                           : PrimitiveSpec::Shape::box;
        if (prim.shape == PrimitiveSpec::Shape::sphere) {
            prim.radius = rng.uniform(0.2, 0.45);
        } else {
            prim.half_extents = {rng.uniform(0.15, 0.35), rng.uniform(0.15, 0.35),
                                 rng.uniform(0.15, 0.35)};
        }
        prim.color = palette[size_t(rng.uniform_int(0, int64_t(palette.size()) - 1))];
        prim.amplitude = {rng.uniform(0.0, 0.45), rng.uniform(0.0, 0.25),
                          rng.uniform(0.0, 0.45)};
        prim.frequency = {rng.uniform(0.25, 1.5), rng.uniform(0.25, 1.5),
                          rng.uniform(0.25, 1.5)};
        prim.phase = {rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, 2.0 * kPi),
                      rng.uniform(0.0, 2.0 * kPi)};
        prim.linear = {rng.uniform(-0.6, 0.6), 0.0, rng.uniform(-0.6, 0.6)};
        prim.base.x = rng.uniform(-1.4, 1.4);
        prim.base.z = rng.uniform(-1.2, 1.2);
        // keep the whole motion envelope above the ground (y-down world:
        // bottom = center.y + size must stay <= ground_y)
        const double clearance = rng.uniform(0.05, 1.1);
        prim.base.y = scene.ground_y - prim.vertical_size() - clearance -
                      prim.amplitude.y - std::abs(prim.linear.y);
        scene.primitives.push_back(prim);
    }
    return scene;
}

void render_frame(const SceneSpec& scene, int frame, const Pose& pose,
                  const Intrinsics& K, RgbFrame* rgb, DepthFrame* depth, int threads) {
    K.validate();
    const double u = scene.frames > 1 ? double(frame) / double(scene.frames - 1) : 0.0;
    const kernels::FramePrims fp = frame_prims(scene, u);
    const auto colors = prim_colors(scene);

    kernels::RayGrid grid;
    grid.ox = pose.t.x;
    grid.oy = pose.t.y;
    grid.oz = pose.t.z;
    for (int i = 0; i < 9; ++i) grid.r[i] = pose.R.m[i];
    grid.cx = K.cx;
    grid.cy = K.cy;
    grid.inv_fx = 1.0 / K.fx;
    grid.inv_fy = 1.0 / K.fy;

    const int w = K.width, h = K.height;
    std::vector<double> tbuf(size_t(w) * h);
    std::vector<int32_t> idbuf(size_t(w) * h);
    const auto& KR = kernels::active_kernels();
    parallel_for(0, h, threads, [&](int64_t y0, int64_t y1) {
        for (int64_t y = y0; y < y1; ++y)
            KR.raycast_span(fp, grid, int(y), 0, w, tbuf.data() + size_t(y) * w,
                            idbuf.data() + size_t(y) * w);
    });

    if (rgb) *rgb = RgbFrame(w, h);
    if (depth) *depth = DepthFrame(w, h);
    for (int y = 0; y < h; ++y) {
        const double py = double(y) + 0.5;
        for (int x = 0; x < w; ++x) {
            const size_t i = size_t(y) * w + x;
            const int32_t id = idbuf[i];
            if (id < 0 || !std::isfinite(tbuf[i])) continue;
            if (depth) depth->set(x, y, tbuf[i]);
            if (!rgb) continue;
            if (id == 0) {
                // checker parity from the analytic hit point
                const double px = double(x) + 0.5;
                const double dcx = (px - grid.cx) * grid.inv_fx;
                const double dcy = (py - grid.cy) * grid.inv_fy;
                const double dxw = grid.r[0] * dcx + grid.r[1] * dcy + grid.r[2];
                const double dzw = grid.r[6] * dcx + grid.r[7] * dcy + grid.r[8];
                const double hx = grid.ox + tbuf[i] * dxw;
                const double hz = grid.oz + tbuf[i] * dzw;
                const int64_t parity =
                    (int64_t(std::floor(hx / scene.checker_period)) +
                     int64_t(std::floor(hz / scene.checker_period))) & 1;
                const auto& c = parity ? scene.checker_a : scene.checker_b;
                rgb->set(x, y, c[0], c[1], c[2]);
            } else {
                const auto& c = colors[size_t(id - 1)];
                rgb->set(x, y, c[0], c[1], c[2]);
            }
        }
    }
}

MultiCamSample render_scene(const SceneSpec& scene,
                            const std::vector<std::vector<Pose>>& cameras,
                            const Intrinsics& K, int source_cam, int threads) {
    if (cameras.size() < 2)
        throw ValidationError("render_scene: needs >= 2 cameras");
    if (source_cam < 0 || source_cam >= int(cameras.size()))
        throw ValidationError("render_scene: source camera index out of range");
    for (const auto& poses : cameras)
        if (int(poses.size()) != scene.frames)
            throw LengthMismatchError("render_scene: camera pose count != scene frames");

    MultiCamSample sample;
    sample.intrinsics = K;
    sample.source_cam = source_cam;
    sample.cams.resize(cameras.size());
    for (size_t c = 0; c < cameras.size(); ++c) {
        sample.cams[c].poses = cameras[c];
        sample.cams[c].rgb.resize(scene.frames);
        sample.cams[c].depth.resize(scene.frames);
    }
    const int64_t jobs = int64_t(cameras.size()) * scene.frames;
    parallel_for(0, jobs, threads, [&](int64_t lo, int64_t hi) {
        for (int64_t j = lo; j < hi; ++j) {
            const size_t c = size_t(j / scene.frames);
            const int f = int(j % scene.frames);
            render_frame(scene, f, cameras[c][f], K, &sample.cams[c].rgb[f],
                         &sample.cams[c].depth[f], 1);
        }
    });
    return sample;
}

std::vector<PairRecord> build_pairs(const MultiCamSample& sample, double stretch_threshold,
                                    const WarpOptions& warp_opts) {
    const auto& src = sample.cams.at(size_t(sample.source_cam));
    WarpOptions opts = warp_opts;
    opts.stretch_threshold = stretch_threshold;
    std::vector<PairRecord> records;
    for (size_t c = 0; c < sample.cams.size(); ++c) {
        if (int(c) == sample.source_cam) continue;
        PairRecord rec;
        rec.target_cam = int(c);
        rec.warped = warp_depth_sequence(src.depth, sample.intrinsics, src.poses,
                                         sample.cams[c].poses, opts);
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace dw
