// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dw/synth.hpp"
#include "dw/trajectory.hpp"
#include "dw/rng.hpp"
#include "support/testutil.hpp"

using namespace dw;

namespace {

const Intrinsics kK{80.0, 80.0, 56.0, 32.0, 112, 64};

std::vector<std::vector<Pose>> two_cameras(const SceneSpec& scene, uint64_t seed) {
    const Vec3 lookat{0.0, -1.2, 0.0};
    const Pose s0 = sample_start(lookat, 1.2, seed);
    const Pose s1 = sample_start(lookat, 1.2, seed + 1);
    const auto t0 = sample_trajectory(s0, lookat, scene.frames, seed + 2, {}, true);
    const auto t1 = sample_trajectory(s1, lookat, scene.frames, seed + 3);
    return {t0.poses, t1.poses};
}

}  // namespace

TEST_SUITE("synth") {

TEST_CASE("camera looking straight down sees the plane at constant depth 2") {
    SceneSpec scene;  // ground only
    scene.frames = 1;
    Pose down;
    // x stays right, y->+z, z->+y(down): camera z axis points at the ground
    down.R = Mat3::from_columns({1, 0, 0}, {0, 0, 1}, {0, 1, 0});
    down.t = {0.0, -2.0, 0.0};
    RgbFrame rgb;
    DepthFrame depth;
    render_frame(scene, 0, down, kK, &rgb, &depth);
    for (int y = 0; y < kK.height; ++y)
        for (int x = 0; x < kK.width; ++x) {
            REQUIRE(depth.is_valid(x, y));
            REQUIRE(depth.at(x, y) == doctest::Approx(2.0).epsilon(1e-12));
        }
}

TEST_CASE("unit sphere ahead: principal ray depth = distance - radius") {
    SceneSpec scene;
    scene.frames = 1;
    PrimitiveSpec s;
    s.shape = PrimitiveSpec::Shape::sphere;
    s.radius = 1.0;
    s.base = {0.0, -1.5, 5.0};
    scene.primitives = {s};
    Pose cam;
    cam.t = {0.0, -1.5, 0.0};
    DepthFrame depth;
    render_frame(scene, 0, cam, kK, nullptr, &depth);
    const int px = int(kK.cx), py = int(kK.cy);
    // principal pixel center is at (cx+0.5-?) - use the nearest pixel and a tolerance
    REQUIRE(depth.is_valid(px, py));
    CHECK(depth.at(px, py) == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("two cameras at the same pose render bitwise-identical frames") {
    const SceneSpec scene = random_scene(5, 3);
    const Vec3 lookat{0, -1.2, 0};
    const Pose cam = sample_start(lookat, 1.2, 9);
    const auto traj = sample_trajectory(cam, lookat, scene.frames, 10, {}, true);
    const MultiCamSample sample = render_scene(scene, {traj.poses, traj.poses}, kK, 0, 2);
    for (int f = 0; f < scene.frames; ++f) {
        CHECK(sample.cams[0].rgb[f].rgb == sample.cams[1].rgb[f].rgb);
        CHECK(sample.cams[0].depth[f].values == sample.cams[1].depth[f].values);
        CHECK(sample.cams[0].depth[f].valid == sample.cams[1].depth[f].valid);
    }
}

TEST_CASE("deterministic per seed, and different seeds differ") {
    const SceneSpec a = random_scene(7, 5);
    const SceneSpec b = random_scene(7, 5);
    CHECK(a.primitives.size() == b.primitives.size());
    for (size_t i = 0; i < a.primitives.size(); ++i) {
        CHECK(a.primitives[i].base.x == b.primitives[i].base.x);
        CHECK(a.primitives[i].radius == b.primitives[i].radius);
    }
    const SceneSpec c = random_scene(8, 5);
    bool differs = a.primitives.size() != c.primitives.size();
    if (!differs && !a.primitives.empty())
        differs = a.primitives[0].base.x != c.primitives[0].base.x;
    CHECK(differs);
}

TEST_CASE("primitive motion keeps everything above the ground") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        const SceneSpec scene = random_scene(seed, 17);
        for (const auto& prim : scene.primitives)
            for (int f = 0; f < scene.frames; ++f) {
                const double u = double(f) / (scene.frames - 1);
                const Vec3 c = prim.center_at(u);
                CHECK(c.y + prim.vertical_size() <= scene.ground_y + 1e-12);
            }
    }
}

TEST_CASE("epipolar consistency: depth from cam A reprojects onto cam B depth") {
    const SceneSpec scene = random_scene(11, 3);
    const auto cams = two_cameras(scene, 21);
    const MultiCamSample sample = render_scene(scene, cams, kK, 0, 2);

    // independent analytic intersector for the exact ray through (u, v) of a
    // camera; shares no code with the render kernels
    auto analytic_depth = [&](double fu, const Pose& pose, double u, double v) {
        const Vec3 dir =
            pose.R * Vec3{(u - kK.cx) / kK.fx, (v - kK.cy) / kK.fy, 1.0};
        const Vec3& o = pose.t;
        double best = 1e300;
        if (dir.y != 0.0) {
            const double t = (scene.ground_y - o.y) / dir.y;
            const double hx = o.x + t * dir.x, hz = o.z + t * dir.z;
            const bool inside = scene.ground_radius <= 0.0 ||
                                hx * hx + hz * hz <= scene.ground_radius * scene.ground_radius;
            if (t > 1e-9 && inside) best = t;
        }
        for (const auto& prim : scene.primitives) {
            const Vec3 c = prim.center_at(fu);
            if (prim.shape == PrimitiveSpec::Shape::sphere) {
                const Vec3 oc = o - c;
                const double a = dir.dot(dir);
                const double hb = oc.dot(dir);
                const double cc = oc.dot(oc) - prim.radius * prim.radius;
                const double disc = hb * hb - a * cc;
                if (disc < 0) continue;
                const double sq = std::sqrt(disc);
                double t = (-hb - sq) / a;
                if (t <= 1e-9) t = (-hb + sq) / a;
                if (t > 1e-9 && t < best) best = t;
            } else {
                const Vec3 lo = c - prim.half_extents, hi = c + prim.half_extents;
                double tn = -1e300, tf = 1e300;
                const double ov[3] = {o.x, o.y, o.z};
                const double dv[3] = {dir.x, dir.y, dir.z};
                const double lv[3] = {lo.x, lo.y, lo.z};
                const double hv[3] = {hi.x, hi.y, hi.z};
                bool miss = false;
                for (int ax = 0; ax < 3 && !miss; ++ax) {
                    if (dv[ax] == 0.0) {
                        if (ov[ax] < lv[ax] || ov[ax] > hv[ax]) miss = true;
                        continue;
                    }
                    double t0 = (lv[ax] - ov[ax]) / dv[ax];
                    double t1 = (hv[ax] - ov[ax]) / dv[ax];
                    if (t0 > t1) std::swap(t0, t1);
                    tn = std::max(tn, t0);
                    tf = std::min(tf, t1);
                }
                if (miss || tn > tf) continue;
                const double t = tn > 1e-9 ? tn : tf;
                if (t > 1e-9 && t < best) best = t;
            }
        }
        return best;
    };

    size_t checked = 0, consistent = 0;
    for (int f = 0; f < scene.frames; ++f) {
        const double fu = scene.frames > 1 ? double(f) / (scene.frames - 1) : 0.0;
        const DepthFrame& da = sample.cams[0].depth[f];
        const Pose& pa = sample.cams[0].poses[f];
        const Pose& pb = sample.cams[1].poses[f];
        for (int y = 0; y < kK.height; y += 2)
            for (int x = 0; x < kK.width; x += 2) {
                if (!da.is_valid(x, y)) continue;
                const Vec3 cam_a = unproject(x + 0.5, y + 0.5, da.at(x, y), kK);
                const Vec3 cam_b = transform_point(cam_a, pa, pb);
                if (!(cam_b.z > 0.1)) continue;
                const Projection pr = project(cam_b, kK);
                if (pr.u < 0 || pr.u >= kK.width || pr.v < 0 || pr.v >= kK.height)
                    continue;
                const double zb = analytic_depth(fu, pb, pr.u, pr.v);
                if (zb >= 1e300) continue;
                ++checked;
                // B's surface along the exact reprojected ray either is the
                // same point (match) or a strictly nearer occluder
                const double rel = (zb - cam_b.z) / cam_b.z;
                if (std::abs(rel) < 0.01 || rel < -0.01) ++consistent;
            }
    }
    REQUIRE(checked > 1000);
    CHECK(double(consistent) / double(checked) > 0.99);
}

TEST_CASE("build_pairs: identity target reproduces GT depth; pair count") {
    const SceneSpec scene = random_scene(13, 3);
    const auto cams = two_cameras(scene, 31);
    // 3 cameras: source + same-as-source + moving
    std::vector<std::vector<Pose>> three = {cams[0], cams[0], cams[1]};
    const MultiCamSample sample = render_scene(scene, three, kK, 0, 2);
    const auto pairs = build_pairs(sample, 0.1);
    REQUIRE(pairs.size() == 2);  // source excluded
    // target 1 == source: identity warp
    const auto& identity_pair = pairs[0];
    REQUIRE(identity_pair.target_cam == 1);
    for (int f = 0; f < scene.frames; ++f) {
        const auto& warped = identity_pair.warped[f];
        const DepthFrame& gt = sample.cams[0].depth[f];
        for (int y = 1; y < kK.height - 1; ++y)
            for (int x = 1; x < kK.width - 1; ++x) {
                if (!warped.mask.at(x, y) || !gt.is_valid(x, y)) continue;
                CHECK(std::abs(warped.depth.at(x, y) - gt.at(x, y)) / gt.at(x, y) < 1e-4);
            }
    }
}

TEST_CASE("build_pairs: warped depth matches target GT (median < 1%)") {
    const SceneSpec scene = random_scene(17, 3);
    const auto cams = two_cameras(scene, 41);
    const MultiCamSample sample = render_scene(scene, cams, kK, 0, 2);
    const auto pairs = build_pairs(sample, 0.1);
    REQUIRE(pairs.size() == 1);
    std::vector<double> rels;
    for (int f = 0; f < scene.frames; ++f) {
        const auto& warped = pairs[0].warped[f];
        const DepthFrame& gt = sample.cams[1].depth[f];
        for (int y = 0; y < kK.height; ++y)
            for (int x = 0; x < kK.width; ++x) {
                if (!warped.mask.at(x, y) || !gt.is_valid(x, y)) continue;
                rels.push_back(std::abs(warped.depth.at(x, y) - gt.at(x, y)) / gt.at(x, y));
            }
    }
    REQUIRE(rels.size() > 500);
    std::nth_element(rels.begin(), rels.begin() + rels.size() / 2, rels.end());
    CHECK(rels[rels.size() / 2] < 0.01);
}

TEST_CASE("render_scene validations") {
    const SceneSpec scene = random_scene(1, 4);
    const auto cams = two_cameras(scene, 51);
    CHECK_THROWS_AS(render_scene(scene, {cams[0]}, kK, 0, 1), ValidationError);
    CHECK_THROWS_AS(render_scene(scene, cams, kK, 5, 1), ValidationError);
    std::vector<std::vector<Pose>> short_cams = cams;
    short_cams[1].pop_back();
    CHECK_THROWS_AS(render_scene(scene, short_cams, kK, 0, 1), LengthMismatchError);
}

}  // TEST_SUITE
