// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dw/trajectory.hpp"
#include "dw/rng.hpp"
#include "support/testutil.hpp"

using namespace dw;

namespace {

constexpr double kDeg = 3.14159265358979323846 / 180.0;
const Vec3 kLookat{0.0, -1.5, 0.0};  // chest height, y-down world

double polyline_length(const std::vector<Vec3>& control, int samples) {
    const auto pts = interpolate(control, samples);
    double len = 0.0;
    for (size_t i = 1; i < pts.size(); ++i) len += (pts[i] - pts[i - 1]).norm();
    return len;
}

// chord sums underestimate the arc by O(h^2); Richardson-extrapolate two
// resolutions so the generator's own quadrature is not trusted
double spline_length(const std::vector<Vec3>& control) {
    const double l1 = polyline_length(control, 20001);
    const double l2 = polyline_length(control, 40001);
    return l2 + (l2 - l1) / 3.0;
}

}  // namespace

TEST_SUITE("trajectory") {

TEST_CASE("sample_start: distances and offsets stay in range (2k draws)") {
    for (uint64_t seed = 0; seed < 2000; ++seed) {
        const Pose p = sample_start(kLookat, 1.5, seed);
        const double r = (p.t - kLookat).norm();
        CHECK(r >= 2.0);
        CHECK(r <= 5.0);
        CHECK(std::abs(position_pitch(p.t, kLookat)) <= 10.0 * kDeg + 1e-12);
        CHECK(std::abs(position_yaw(p.t, kLookat)) <= 10.0 * kDeg + 1e-12);
        CHECK(p.t.y < 0.0);  // above ground
    }
}

TEST_CASE("sample_start: deterministic per seed") {
    const Pose a = sample_start(kLookat, 1.5, 99);
    const Pose b = sample_start(kLookat, 1.5, 99);
    CHECK(a.t.x == b.t.x);
    CHECK(a.t.y == b.t.y);
    CHECK(a.t.z == b.t.z);
    for (int i = 0; i < 9; ++i) CHECK(a.R.m[i] == b.R.m[i]);
}

TEST_CASE("sample_start: offsets look uniform (KS test)") {
    // KS statistic against U[-10, 10] degrees over 10k draws
    std::vector<double> pitches, yaws;
    for (uint64_t seed = 0; seed < 10000; ++seed) {
        const Pose p = sample_start(kLookat, 1.5, seed);
        pitches.push_back(position_pitch(p.t, kLookat) / kDeg);
        yaws.push_back(position_yaw(p.t, kLookat) / kDeg);
    }
    auto ks = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        double d = 0.0;
        const double n = double(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            const double cdf = (v[i] + 10.0) / 20.0;
            d = std::max(d, std::abs(cdf - double(i + 1) / n));
            d = std::max(d, std::abs(cdf - double(i) / n));
        }
        return d;
    };
    // K-S critical value at alpha = 0.01 for n = 10000 is 1.63 / sqrt(n)
    const double crit = 1.63 / std::sqrt(10000.0);
    CHECK(ks(pitches) < crit);
    CHECK(ks(yaws) < crit);
}

TEST_CASE("look-at: the look-at point projects onto the principal point") {
    const Intrinsics K{500.0, 500.0, 288.0, 512.0, 576, 1024};
    for (uint64_t seed = 0; seed < 50; ++seed) {
        const Pose start = sample_start(kLookat, 1.5, seed);
        const auto traj = sample_trajectory(start, kLookat, 33, seed + 1);
        for (const auto& pose : traj.poses) {
            CHECK(pose.is_orthonormal(1e-9));
            const Vec3 cam = pose.to_camera(kLookat);
            const Projection pr = project(cam, K);
            CHECK(std::abs(pr.u - K.cx) < 1e-6);
            CHECK(std::abs(pr.v - K.cy) < 1e-6);
        }
    }
}

TEST_CASE("sample_trajectory: endpoint, count, determinism") {
    const Pose start = sample_start(kLookat, 1.5, 5);
    const auto a = sample_trajectory(start, kLookat, 81, 17);
    REQUIRE(a.poses.size() == 81);
    CHECK((a.poses.front().t - start.t).norm() < 1e-12);
    const auto b = sample_trajectory(start, kLookat, 81, 17);
    for (size_t i = 0; i < a.poses.size(); ++i)
        CHECK((a.poses[i].t - b.poses[i].t).norm() == 0.0);
}

TEST_CASE("sample_trajectory: path length and rotation budgets (200 draws)") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        const Pose start = sample_start(kLookat, 1.5, seed * 3 + 1);
        const auto traj = sample_trajectory(start, kLookat, 33, seed * 7 + 2);
        const double r0 = (start.t - kLookat).norm();

        // re-measure the spline independently of the generator's bookkeeping
        std::vector<Vec3> control = {traj.spec.start};
        control.insert(control.end(), traj.spec.waypoints.begin(), traj.spec.waypoints.end());
        const double len = spline_length(control);
        CHECK(std::abs(len - traj.spec.path_length) < 1e-6);
        CHECK(traj.spec.path_length >= 0.5 * r0 - 1e-9);
        CHECK(traj.spec.path_length <= 1.5 * r0 + 1e-9);
        CHECK(traj.spec.waypoints.size() >= 1);
        CHECK(traj.spec.waypoints.size() <= 3);

        double pmin = 1e9, pmax = -1e9, ymin = 1e9, ymax = -1e9;
        for (const auto& pose : traj.poses) {
            pmin = std::min(pmin, position_pitch(pose.t, kLookat));
            pmax = std::max(pmax, position_pitch(pose.t, kLookat));
            ymin = std::min(ymin, position_yaw(pose.t, kLookat));
            ymax = std::max(ymax, position_yaw(pose.t, kLookat));
        }
        CHECK(pmax - pmin <= 40.0 * kDeg + 1e-9);
        CHECK(ymax - ymin <= 20.0 * kDeg + 1e-9);
        for (size_t i = 1; i < traj.poses.size(); ++i)
            CHECK(rotation_angle_between(traj.poses[i - 1].R, traj.poses[i].R) <=
                  5.0 * kDeg + 1e-9);
    }
}

TEST_CASE("static camera mode: all poses identical") {
    const Pose start = sample_start(kLookat, 1.5, 3);
    const auto traj = sample_trajectory(start, kLookat, 81, 11, {}, true);
    REQUIRE(traj.poses.size() == 81);
    CHECK(traj.spec.is_static);
    CHECK(traj.spec.path_length == 0.0);
    for (const auto& p : traj.poses) {
        CHECK((p.t - start.t).norm() == 0.0);
        for (int i = 0; i < 9; ++i) CHECK(p.R.m[i] == start.R.m[i]);
    }
}

TEST_CASE("interpolate: endpoints exact, linear midpoint at midframe") {
    const std::vector<Vec3> control = {{0, 0, 0}, {2, 0, 0}};
    const auto pts = interpolate(control, 3);
    REQUIRE(pts.size() == 3);
    CHECK((pts.front() - control.front()).norm() == 0.0);
    CHECK((pts.back() - control.back()).norm() == 0.0);
    // ease-in/out timing reaches half the arc at the middle frame
    CHECK((pts[1] - Vec3{1, 0, 0}).norm() < 1e-9);
}

TEST_CASE("interpolate: reversal symmetry within 1e-9") {
    const std::vector<Vec3> control = {
        {0, 0, 0}, {1.0, -0.4, 0.3}, {2.2, -0.1, 1.0}, {3.0, -0.8, 0.2}};
    std::vector<Vec3> reversed(control.rbegin(), control.rend());
    const int n = 41;
    const auto fwd = interpolate(control, n);
    const auto rev = interpolate(reversed, n);
    for (int i = 0; i < n; ++i) CHECK((fwd[i] - rev[n - 1 - i]).norm() < 1e-9);
}

TEST_CASE("interpolate: passes through interior control points") {
    // mirror-symmetric control set: the interior point sits at half the arc,
    // so the middle frame of an odd count must land on it exactly
    const std::vector<Vec3> control = {{0, 0, 0}, {1, -0.7, 0.0}, {2, 0, 0}};
    const auto pts = interpolate(control, 5);
    CHECK((pts[2] - control[1]).norm() < 1e-9);

    // and a loose dense-sampling sweep for an asymmetric set
    const std::vector<Vec3> asym = {{0, 0, 0}, {1, -0.5, 0.2}, {2, 0, 1}};
    const auto dense = interpolate(asym, 4001);
    for (const auto& c : asym) {
        double best = 1e9;
        for (const auto& p : dense) best = std::min(best, (p - c).norm());
        CHECK(best < 2e-3);  // within a frame step of the dense sampling
    }
}

TEST_CASE("interpolate: duplicate consecutive control points are skipped") {
    const std::vector<Vec3> control = {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}};
    const auto pts = interpolate(control, 5);
    CHECK((pts.front() - Vec3{0, 0, 0}).norm() == 0.0);
    CHECK((pts.back() - Vec3{1, 0, 0}).norm() == 0.0);
}

TEST_CASE("interpolate input validation") {
    CHECK_THROWS_AS(interpolate({{0, 0, 0}}, 5), ValidationError);
    CHECK_THROWS_AS(interpolate({{0, 0, 0}, {1, 0, 0}}, 1), ValidationError);
}

TEST_CASE("sample_trajectory: impossible constraints raise SamplingError") {
    const Pose start = sample_start(kLookat, 1.5, 8);
    TrajectoryRanges impossible;
    impossible.pitch_limit_deg = 0.0;  // any movement violates this
    impossible.yaw_limit_deg = 0.0;
    CHECK_THROWS_AS(sample_trajectory(start, kLookat, 33, 4, impossible), SamplingError);
}

TEST_CASE("look_at_pose: vertical view direction is rejected") {
    CHECK_THROWS_AS(look_at_pose({0, -5, 0}, {0, 0, 0}), SamplingError);
}

}  // TEST_SUITE
